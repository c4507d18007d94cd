#include "smtl/trace_json.hpp"

#include "smtl/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <vector>

namespace smtl {

using nlohmann::json;

namespace {

constexpr const char* kRawNumber = "\x01num:";

/// Builds a DOM where floating-point literals keep their source text,
/// tagged so they can be told apart from JSON strings.
class ExactSax : public nlohmann::json_sax<json> {
public:
  json root;

  bool null() override { return put(nullptr); }
  bool boolean(bool v) override { return put(v); }
  bool number_integer(number_integer_t v) override { return put(v); }
  bool number_unsigned(number_unsigned_t v) override { return put(v); }
  bool number_float(number_float_t, const string_t& raw) override {
    return put(std::string(kRawNumber) + raw);
  }
  bool string(string_t& v) override { return put(v); }
  bool binary(binary_t&) override { return put(nullptr); }
  bool start_object(std::size_t) override { return open(json::object()); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(json::array()); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) override {
    throw TraceFormatError("invalid JSON at byte " + std::to_string(pos) + ": " + e.what());
  }

private:
  json* insert(json value) {
    if (stack_.empty()) {
      root = std::move(value);
      return &root;
    }
    json& parent = *stack_.back();
    if (parent.is_array()) {
      parent.push_back(std::move(value));
      return &parent.back();
    }
    json& slot = parent[key_];
    slot = std::move(value);
    return &slot;
  }
  bool put(json value) {
    insert(std::move(value));
    return true;
  }
  bool open(json value) {
    stack_.push_back(insert(std::move(value)));
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  std::vector<json*> stack_;
  std::string key_;
};

Rational to_rational(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
    if (v.is_number_unsigned()) return Rational(std::to_string(v.get<unsigned long long>()));
    if (v.is_string()) {
      auto s = v.get<std::string>();
      if (s.rfind(kRawNumber, 0) == 0) return parse_rational(s.substr(std::string(kRawNumber).size()), true);
      return parse_rational(s, true);
    }
  } catch (const std::invalid_argument& e) {
    throw TraceFormatError(where + ": " + e.what());
  }
  throw TraceFormatError(where + ": expected a number");
}

int to_level(const std::string& key) {
  try {
    std::size_t used = 0;
    int k = std::stoi(key, &used);
    if (used == key.size()) return k;
  } catch (const std::exception&) {
  }
  throw TraceFormatError("level key '" + key + "' is not an integer");
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw TraceFormatError(std::string("missing field '") + name + "'");
  return *it;
}

AbstractionOp to_op(const json& j) {
  if (!j.is_object()) throw TraceFormatError("hierarchy entries must be objects");
  const auto kind = field(j, "op").get<std::string>();
  AbstractionOp op;
  if (kind == "identity") {
    op = abstraction::Identity{};
  } else if (kind == "project") {
    abstraction::Project p;
    for (const auto& name : field(j, "keep")) p.keep.insert(name.get<std::string>());
    op = p;
  } else if (kind == "smooth_isolated") {
    op = abstraction::SmoothIsolated{to_rational(field(j, "radius"), "radius")};
  } else if (kind == "downsample") {
    abstraction::Downsample d{to_rational(field(j, "period"), "period")};
    if (auto h = j.find("hold"); h != j.end()) d.hold = h->get<bool>();
    op = d;
  } else {
    throw TraceFormatError("unknown abstraction op '" + kind + "'");
  }
  try {
    check_op(op);
  } catch (const std::invalid_argument& e) {
    throw TraceFormatError(e.what());
  }
  return op;
}

json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return format_rational(r);
}

json op_json(const AbstractionOp& op) {
  return std::visit(
      [](const auto& o) -> json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, abstraction::Identity>) {
          return {{"op", "identity"}};
        } else if constexpr (std::is_same_v<T, abstraction::Project>) {
          return {{"op", "project"}, {"keep", o.keep}};
        } else if constexpr (std::is_same_v<T, abstraction::SmoothIsolated>) {
          return {{"op", "smooth_isolated"}, {"radius", rational_json(o.radius)}};
        } else {
          return {{"op", "downsample"}, {"period", rational_json(o.period)}, {"hold", o.hold}};
        }
      },
      op);
}

} // namespace

TraceDocument parse_trace_json(std::string_view text) {
  ExactSax sax;
  try {
    json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const nlohmann::json::exception& e) {
    throw TraceFormatError(std::string("invalid JSON: ") + e.what());
  }
  const json& root = sax.root;
  if (!root.is_object()) throw TraceFormatError("trace document must be a JSON object");

  TraceDocument doc;
  try {
    std::size_t i = 0;
    for (const auto& ts : field(root, "timestamps"))
      doc.trace.timestamps.push_back(to_rational(ts, "timestamps[" + std::to_string(i++) + "]"));
    for (const auto& [key, value] : field(root, "resolutions").items())
      doc.trace.resolutions[to_level(key)] = to_rational(value, "resolutions." + key);
    for (const auto& [key, states] : field(root, "levels").items()) {
      StateSequence seq;
      for (const auto& state : states) {
        State s;
        for (const auto& p : state) s.insert(p.get<std::string>());
        seq.push_back(std::move(s));
      }
      doc.trace.levels[to_level(key)] = std::move(seq);
    }
    if (auto h = root.find("hierarchy"); h != root.end()) {
      Hierarchy hierarchy;
      hierarchy.resolutions = doc.trace.resolutions;
      for (const auto& op : *h) hierarchy.ops.push_back(to_op(op));
      doc.hierarchy = std::move(hierarchy);
    }
  } catch (const nlohmann::json::exception& e) {
    throw TraceFormatError(std::string("malformed trace: ") + e.what());
  }

  if (doc.hierarchy) {
    bool consistent = false;
    try {
      consistent = check_consistency(doc.trace, *doc.hierarchy);
    } catch (const LevelMismatch& e) {
      throw TraceFormatError(e.what());
    }
    if (!consistent)
      throw TraceFormatError("levels are not consistent with the declared hierarchy");
  }
  return doc;
}

TraceDocument load_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TraceFormatError("cannot open trace file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_trace_json(buffer.str());
}

std::string to_trace_json(const StratifiedTrace& t, const Hierarchy* hierarchy) {
  json root;
  root["timestamps"] = json::array();
  for (const auto& ts : t.timestamps) root["timestamps"].push_back(rational_json(ts));
  root["resolutions"] = json::object();
  for (const auto& [k, rho] : t.resolutions) root["resolutions"][std::to_string(k)] = rational_json(rho);
  root["levels"] = json::object();
  for (const auto& [k, seq] : t.levels) {
    json states = json::array();
    for (const auto& s : seq) states.push_back(s);
    root["levels"][std::to_string(k)] = std::move(states);
  }
  if (hierarchy) {
    root["hierarchy"] = json::array();
    for (const auto& op : hierarchy->ops) root["hierarchy"].push_back(op_json(op));
  }
  return root.dump() + "\n";
}

} // namespace smtl
