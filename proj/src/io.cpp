#include "ldcell/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ldcell/error.hpp"

namespace ldcell {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  const auto value = v.get<long long>();
  if (value < 0 || value > 1'000'000) throw FormatError(std::string("field '") + key + "' out of range");
  return static_cast<int>(value);
}

Model model_field(const Json& j) {
  const Json& v = field(j, "model");
  if (!v.is_string()) throw FormatError("field 'model' must be a string");
  try {
    return parse_model(v.get<std::string>());
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Json params_to_json(Model model, const CellParams& p) {
  Json j;
  j["model"] = std::string(to_string(model));
  j["n1"] = p.n1;
  j["n2"] = p.n2;
  j["n3"] = p.n3;
  j["n4"] = p.n4;
  j["nM"] = p.nM;
  j["nD"] = p.nD;
  j["q"] = p.q;
  return j;
}

std::pair<Model, CellParams> params_from_json(const Json& j) {
  const Model model = model_field(j);
  CellParams p{int_field(j, "n1"), int_field(j, "n2"), int_field(j, "n3"), int_field(j, "n4"),
               int_field(j, "nM"), int_field(j, "nD"), 0};
  p.q = j.contains("q") ? int_field(j, "q") : p.max_gain();
  p.validate();
  return {model, p};
}

Json scheme_to_json(const LinearScheme& s) {
  Json j;
  j["model"] = std::string(to_string(s.model));
  j["params"] = params_to_json(s.model, s.params);
  Json messages = Json::array();
  for (const auto& m : s.messages) {
    Json e;
    e["name"] = m.name;
    e["owner"] = m.owner;
    e["decoders"] = m.decoders;
    Json columns = Json::array();
    for (std::size_t c = 0; c < m.kbits(); ++c) {
      Json levels = Json::array();
      for (std::size_t r = 0; r < m.generator.rows(); ++r) {
        if (m.generator.get(r, c)) levels.push_back(r + 1);
      }
      columns.push_back(std::move(levels));
    }
    e["columns"] = std::move(columns);
    messages.push_back(std::move(e));
  }
  j["messages"] = std::move(messages);
  return j;
}

LinearScheme scheme_from_json(const Json& j) {
  LinearScheme s;
  s.model = model_field(j);
  const auto [params_model, params] = params_from_json(field(j, "params"));
  if (params_model != s.model) throw FormatError("params.model differs from model");
  s.params = params;
  const auto q = static_cast<std::size_t>(params.q);

  const Json& messages = field(j, "messages");
  if (!messages.is_array()) throw FormatError("field 'messages' must be an array");
  for (const Json& e : messages) {
    MessageEntry m;
    const Json& name = field(e, "name");
    if (!name.is_string()) throw FormatError("message name must be a string");
    m.name = name.get<std::string>();
    m.owner = int_field(e, "owner");
    const Json& decoders = field(e, "decoders");
    if (!decoders.is_array()) throw FormatError("decoders of '" + m.name + "' must be an array");
    for (const Json& d : decoders) {
      if (!d.is_number_integer()) throw FormatError("decoder ids must be integers");
      m.decoders.push_back(d.get<int>());
    }
    const Json& columns = field(e, "columns");
    if (!columns.is_array()) throw FormatError("columns of '" + m.name + "' must be an array");
    m.generator = BitMatrix(q, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!columns[c].is_array()) throw FormatError("each column must be a list of levels");
      for (const Json& level : columns[c]) {
        if (!level.is_number_integer()) throw FormatError("levels must be integers");
        const auto l = level.get<long long>();
        if (l < 1 || static_cast<std::size_t>(l) > q) {
          throw FormatError("level " + std::to_string(l) + " of '" + m.name + "' outside 1.." + std::to_string(q));
        }
        const auto row = static_cast<std::size_t>(l - 1);
        m.generator.set(row, c, !m.generator.get(row, c));
      }
    }
    s.messages.push_back(std::move(m));
  }
  s.validate();
  return s;
}

std::string scheme_to_string(const LinearScheme& s) {
  const Json j = scheme_to_json(s);
  std::ostringstream os;
  os << "{\n";
  os << "  \"model\": " << j["model"].dump() << ",\n";
  os << "  \"params\": " << j["params"].dump() << ",\n";
  os << "  \"messages\": [";
  const auto& messages = j["messages"];
  for (std::size_t i = 0; i < messages.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n") << "    " << messages[i].dump();
  }
  os << (messages.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

LinearScheme scheme_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return scheme_from_json(j);
}

LinearScheme read_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return scheme_from_string(buf.str());
}

void write_scheme_file(const std::filesystem::path& path, const LinearScheme& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << scheme_to_string(s);
  if (!out) throw Error("write to " + path.string() + " failed");
}

void write_wcurve_csv(std::ostream& os, const WCurveSweep& sweep) {
  os << kWCurveHeader << '\n';
  for (const auto& pt : sweep.points) {
    os << pt.alpha.num() << ',' << pt.alpha.den() << ',' << pt.ni << ',' << pt.achievable.num() << ','
       << pt.bound.num() << ',' << pt.bound.den() << ',' << pt.gap.num() << ',' << pt.gap.den() << ','
       << pt.regime_label() << '\n';
  }
}

}  // namespace ldcell
