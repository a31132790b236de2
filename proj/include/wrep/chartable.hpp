#pragma once

#include "wrep/weilrep.hpp"

#include <json.hpp>
#include <string>

namespace wrep {

// {order, exponent, classes:[{size, rep}], characters:[{name?, dim, values:[[coeffs]]}]}
CharacterTable parse_character_table(const nlohmann::ordered_json &j);
CharacterTable load_character_table(const std::string &path);
nlohmann::ordered_json character_table_to_json(const CharacterTable &CT);

} // namespace wrep
