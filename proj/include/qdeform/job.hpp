// Job specification: field choice, group, letters, components, linking
// parameters, extra relations, and the degree bound -- assembled either from
// a built-in preset or from a sectioned plain-text config file.

#pragma once

#include <string>
#include <vector>

#include "qdeform/braided.hpp"
#include "qdeform/yd.hpp"

namespace qdeform {

struct JobSpec {
  std::string name;
  Field field;
  DatumPtr datum;
  LinkingParams lambda;
  std::vector<NcPoly> component_relations;
  int degree = 6;                 // completion bound D
  bool use_lambda_rules = false;  // "-lambda" preset variants
};

// Presets: sl2, sl3, uq-sl2-N5 (each also with a -lambda variant that makes
// single-presentation commands work in H^lambda), plus the one-component
// restrictions sl2-plus and sl3-plus used by the primitives command.
std::vector<std::string> preset_names();
JobSpec load_preset(const std::string& name);

// Sectioned config file: [field], [group], [component], [letter]
// (repeatable), [link] (repeatable), [relations], [options].
JobSpec load_spec_file(const std::string& path);

// preset name when known, otherwise a file path
JobSpec load_spec(const std::string& name_or_path);

}  // namespace qdeform
