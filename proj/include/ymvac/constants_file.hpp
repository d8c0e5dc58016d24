#pragma once

#include <istream>
#include <map>
#include <string>

#include "ymvac/pheno.hpp"

namespace ymvac {

/// Malformed or unknown entry in a constants file.
class ConstantsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keys accepted in a constants file, with their GeV power.
const std::map<std::string, int>& constants_keys();

/// Parses `key = value` lines; '#' starts a comment, blank lines are skipped.
/// Values are plain numbers in the GeV power of their key (n_f, n_c integers).
/// Keys not present keep their value from `base`. Unknown or repeated keys and
/// unparsable values throw ConstantsError naming the line.
PhenoInputs parse_constants(std::istream& in, const PhenoInputs& base = {},
                            const std::string& source = "<stream>");
PhenoInputs load_constants(const std::string& path, const PhenoInputs& base = {});

/// Sets one field by key (same rules as the file parser).
void set_constant(PhenoInputs& inputs, const std::string& key, const std::string& value);

/// Key-value view of all fields, in the order of constants_keys().
std::map<std::string, double> constants_map(const PhenoInputs& inputs);

}  // namespace ymvac
