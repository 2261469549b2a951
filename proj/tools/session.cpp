#include "session.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fthresh/parser.hpp"

namespace fthresh::cli {

namespace {

const std::set<std::string> kTopLevel{"p", "variables", "relations", "ideals", "elements", "options"};
const std::set<std::string> kOptions{"D", "e_max", "seed", "max_denominator"};

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

Json parse_document(const std::string& text) {
  // Duplicate keys are rejected; the json library would keep the last one.
  std::vector<std::set<std::string>> open;
  auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start: open.emplace_back(); break;
      case Json::parse_event_t::object_end: open.pop_back(); break;
      case Json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!open.back().insert(key).second) throw SessionError("duplicate key \"" + key + "\"");
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return Json::parse(text, callback);
  } catch (const Json::parse_error& e) {
    throw SessionError("malformed session at byte " + std::to_string(e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
}

template <typename T>
T field(const Json& doc, const std::string& key, const std::string& path) {
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw SessionError(path + key + ": " + e.what());
  }
}

Polynomial parse_at(const std::string& text, const PolyRingPtr& ring, const std::string& where) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    throw SessionError(where + ": " + e.what());
  }
}

}  // namespace

std::vector<std::string> split_generators(const std::string& literal) {
  std::string body = literal;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos || body[first] != '(' || body[last] != ')')
    throw SessionError("ideal literal must look like (g1, g2, ...): " + literal);
  body = body.substr(first + 1, last - first - 1);
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (current.find_first_not_of(" \t") != std::string::npos) out.push_back(current);
  return out;
}

Session Session::parse(const std::string& text) {
  Json doc = parse_document(text);
  if (!doc.is_object()) throw SessionError("session must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kTopLevel.count(key)) throw SessionError("unknown field \"" + key + "\"");

  Session s;
  s.p_ = field<std::uint32_t>(doc, "p", "");
  s.variables_ = field<std::vector<std::string>>(doc, "variables", "");
  if (doc.contains("relations")) s.relations_ = field<std::vector<std::string>>(doc, "relations", "");
  try {
    s.ring_ = QuotientRing::create(make_poly_ring(s.p_, s.variables_), {});
  } catch (const Error& e) {
    throw SessionError(std::string("ring: ") + e.what());
  }
  std::vector<Polynomial> relations;
  for (std::size_t i = 0; i < s.relations_.size(); ++i)
    relations.push_back(parse_at(s.relations_[i], s.ring_->ambient(), "relations[" + std::to_string(i) + "]"));
  try {
    s.ring_ = QuotientRing::create(s.ring_->ambient(), relations);
  } catch (const Error& e) {
    throw SessionError(std::string("relations: ") + e.what());
  }

  std::set<std::string> names;
  auto claim = [&](const std::string& name, const std::string& where) {
    if (!is_name(name)) throw SessionError(where + ": \"" + name + "\" is not a valid name");
    if (name == "m") throw SessionError(where + ": \"m\" is reserved for the maximal ideal");
    for (const auto& v : s.variables_)
      if (v == name) throw SessionError(where + ": \"" + name + "\" clashes with a variable");
    if (!names.insert(name).second) throw SessionError(where + ": name \"" + name + "\" is used twice");
  };
  if (doc.contains("ideals")) {
    const Json& ideals = doc.at("ideals");
    if (!ideals.is_object()) throw SessionError("ideals must be an object");
    for (const auto& [name, gens] : ideals.items()) {
      claim(name, "ideals." + name);
      auto list = field<std::vector<std::string>>(ideals, name, "ideals.");
      for (std::size_t i = 0; i < list.size(); ++i)
        parse_at(list[i], s.ring_->ambient(), "ideals." + name + "[" + std::to_string(i) + "]");
      s.ideals_.emplace_back(name, std::move(list));
    }
  }
  if (doc.contains("elements")) {
    const Json& elements = doc.at("elements");
    if (!elements.is_object()) throw SessionError("elements must be an object");
    for (const auto& [name, value] : elements.items()) {
      claim(name, "elements." + name);
      auto text_value = field<std::string>(elements, name, "elements.");
      parse_at(text_value, s.ring_->ambient(), "elements." + name);
      s.elements_.emplace_back(name, std::move(text_value));
    }
  }
  if (doc.contains("options")) {
    const Json& opts = doc.at("options");
    if (!opts.is_object()) throw SessionError("options must be an object");
    for (const auto& [key, value] : opts.items())
      if (!kOptions.count(key)) throw SessionError("options: unknown option \"" + key + "\"");
    if (opts.contains("D")) s.options_.D = field<unsigned>(opts, "D", "options.");
    if (opts.contains("e_max")) s.options_.e_max = field<unsigned>(opts, "e_max", "options.");
    if (opts.contains("seed")) s.options_.seed = field<std::uint64_t>(opts, "seed", "options.");
    if (opts.contains("max_denominator"))
      s.options_.max_denominator = field<std::int64_t>(opts, "max_denominator", "options.");
  }
  return s;
}

Session Session::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SessionError("cannot read session file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Ideal Session::ideal(const std::string& ref) const {
  if (ref == "m") return Ideal::maximal(ring_);
  for (const auto& [name, gens] : ideals_)
    if (name == ref) return Ideal::parse(ring_, gens);
  if (ref.find('(') != std::string::npos) {
    std::vector<Polynomial> gens;
    for (const auto& g : split_generators(ref)) gens.push_back(parse_at(g, ring_->ambient(), "ideal literal"));
    return Ideal(ring_, std::move(gens));
  }
  throw SessionError("unknown ideal \"" + ref + "\"");
}

Polynomial Session::element(const std::string& ref) const {
  for (const auto& [name, value] : elements_)
    if (name == ref) return ring_->parse(value);
  return parse_at(ref, ring_->ambient(), "element \"" + ref + "\"");
}

Json Session::to_json() const {
  Json doc;
  doc["p"] = p_;
  doc["variables"] = variables_;
  doc["relations"] = relations_;
  doc["ideals"] = Json::object();
  for (const auto& [name, gens] : ideals_) doc["ideals"][name] = gens;
  doc["elements"] = Json::object();
  for (const auto& [name, value] : elements_) doc["elements"][name] = value;
  Json opts = Json::object();
  if (options_.D) opts["D"] = *options_.D;
  if (options_.e_max) opts["e_max"] = *options_.e_max;
  if (options_.seed) opts["seed"] = *options_.seed;
  if (options_.max_denominator) opts["max_denominator"] = *options_.max_denominator;
  doc["options"] = opts;
  return doc;
}

std::string Session::to_text() const { return to_json().dump(2) + "\n"; }

}  // namespace fthresh::cli
