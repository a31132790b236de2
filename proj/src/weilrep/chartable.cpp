#include "wrep/chartable.hpp"
#include "wrep/error.hpp"

#include <fstream>

namespace wrep {

namespace {

Rat parse_rat(const nlohmann::ordered_json &v)
{
	if (v.is_number_integer())
		return Rat(v.get<long long>());
	if (v.is_string())
	{
		std::string s = v.get<std::string>();
		auto pos = s.find('/');
		try
		{
			if (pos == std::string::npos)
				return Rat(Int(s));
			Int den(s.substr(pos + 1));
			if (den == 0)
				throw Error(ErrorKind::InvalidCharacterTable, "zero denominator");
			return Rat(Int(s.substr(0, pos)), den);
		}
		catch (const std::runtime_error &)
		{
			throw Error(ErrorKind::InvalidCharacterTable, "bad rational '" + s + "'");
		}
	}
	throw Error(ErrorKind::InvalidCharacterTable, "character values must be integers or \"a/b\" strings");
}

nlohmann::ordered_json rat_json(const Rat &r)
{
	if (is_integer(r) && abs(numerator(r)) < (Int(1) << 53))
		return numerator(r).convert_to<long long>();
	return to_string(r);
}

} // namespace

CharacterTable parse_character_table(const nlohmann::ordered_json &j)
{
	CharacterTable CT;
	try
	{
		CT.order = j.at("order").get<uint64_t>();
		CT.exponent = j.at("exponent").get<uint64_t>();
		for (auto &c : j.at("classes"))
			CT.classes.push_back({c.at("size").get<uint64_t>(), c.at("rep").get<std::string>()});
		int idx = 0;
		for (auto &c : j.at("characters"))
		{
			CharacterTable::Character ch;
			++idx;
			ch.name = c.contains("name") ? c["name"].get<std::string>() : "chi" + std::to_string(idx);
			ch.dim = c.at("dim").get<int>();
			for (auto &v : c.at("values"))
			{
				std::vector<Rat> coeffs;
				if (v.is_array())
					for (auto &x : v)
						coeffs.push_back(parse_rat(x));
				else
					coeffs.push_back(parse_rat(v));
				ch.values.push_back(std::move(coeffs));
			}
			CT.characters.push_back(std::move(ch));
		}
	}
	catch (const nlohmann::json::exception &e)
	{
		throw Error(ErrorKind::InvalidCharacterTable, e.what());
	}
	validate_character_table(CT);
	return CT;
}

CharacterTable load_character_table(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw Error(ErrorKind::Parse, "cannot open character table " + path);
	nlohmann::ordered_json j;
	try
	{
		j = nlohmann::ordered_json::parse(in);
	}
	catch (const nlohmann::json::exception &e)
	{
		throw Error(ErrorKind::Parse, path + ": " + e.what());
	}
	return parse_character_table(j);
}

nlohmann::ordered_json character_table_to_json(const CharacterTable &CT)
{
	nlohmann::ordered_json j;
	j["order"] = CT.order;
	j["exponent"] = CT.exponent;
	j["classes"] = nlohmann::ordered_json::array();
	for (auto &c : CT.classes)
		j["classes"].push_back({{"size", c.size}, {"rep", c.rep}});
	j["characters"] = nlohmann::ordered_json::array();
	for (auto &ch : CT.characters)
	{
		nlohmann::ordered_json vals = nlohmann::ordered_json::array();
		for (auto &v : ch.values)
		{
			nlohmann::ordered_json a = nlohmann::ordered_json::array();
			for (auto &x : v)
				a.push_back(rat_json(x));
			vals.push_back(a);
		}
		j["characters"].push_back({{"name", ch.name}, {"dim", ch.dim}, {"values", vals}});
	}
	return j;
}

} // namespace wrep
