#include "lielat/io.hpp"

#include <fstream>

namespace lielat {

LieLattice lattice_from_json(const Json& j) {
  LieLattice l;
  try {
    l.name = j.value("name", std::string("unnamed"));
    l.p = Int(j.at("p").get<long long>());
    l.dim = j.at("dim").get<int>();
    if (j.contains("basis")) l.labels = j.at("basis").get<std::vector<std::string>>();
    if (j.contains("brackets")) {
      for (const auto& entry : j.at("brackets")) {
        int i = entry.at("i").get<int>();
        int jj = entry.at("j").get<int>();
        std::vector<Rat> coeffs;
        for (const auto& c : entry.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
        l.set_bracket(i, jj, std::move(coeffs));
      }
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("lattice JSON: ") + e.what());
  }
  return l;
}

Json lattice_to_json(const LieLattice& l) {
  Json j;
  j["name"] = l.name;
  j["p"] = l.p.convert_to<long long>();
  j["dim"] = l.dim;
  if (!l.labels.empty()) j["basis"] = l.labels;
  Json brackets = Json::array();
  for (const auto& [ij, c] : l.brackets) {
    Json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    Json coeffs = Json::array();
    for (const auto& x : c) coeffs.push_back(rational_str(x));
    e["coeffs"] = coeffs;
    brackets.push_back(e);
  }
  j["brackets"] = brackets;
  return j;
}

LieLattice parse_lattice_spec(const std::string& spec, const Int& p_override) {
  LieLattice l;
  if (spec.rfind("builtin:", 0) == 0) {
    std::string rest = spec.substr(8);
    int dim = 0;
    auto q = rest.find('?');
    if (q != std::string::npos) {
      std::string params = rest.substr(q + 1);
      rest = rest.substr(0, q);
      if (params.rfind("dim=", 0) == 0)
        dim = std::stoi(params.substr(4));
      else
        throw InvalidInput("unknown builtin parameter: " + params);
    }
    if (p_override <= 0) throw InvalidInput("builtin lattices require --p");
    l = builtin_lattice(rest, p_override, dim);
  } else {
    std::ifstream f(spec);
    if (!f) throw InvalidInput("cannot open lattice file: " + spec);
    Json j;
    try {
      f >> j;
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    l = lattice_from_json(j);
    if (p_override > 0) l.p = p_override;
  }
  validate_or_throw(l);
  return l;
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix JSON: expected array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& rj : j) {
    std::vector<Rat> row;
    for (const auto& c : rj) {
      if (c.is_string())
        row.push_back(parse_rational(c.get<std::string>()));
      else
        row.push_back(Rat(Int(c.get<long long>())));
    }
    rows.push_back(std::move(row));
  }
  return QMatrix::from_rows(rows);
}

namespace {

Json json_from_text_or_file(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) {
    try {
      return Json::parse(arg);
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("malformed inline JSON: ") + e.what());
    }
  }
  std::string path = (!arg.empty() && arg[0] == '@') ? arg.substr(1) : arg;
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open file: " + path);
  try {
    Json j;
    f >> j;
    return j;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

}  // namespace

QMatrix parse_matrix_arg(const std::string& arg) {
  if (arg.rfind("diag(", 0) == 0 && arg.back() == ')') {
    std::vector<Rat> d;
    std::string inner = arg.substr(5, arg.size() - 6);
    size_t pos = 0;
    while (pos <= inner.size()) {
      auto comma = inner.find(',', pos);
      std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw InvalidInput("diag(): empty entry");
      d.push_back(parse_rational(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return QMatrix::diagonal(d);
  }
  return matrix_from_json(json_from_text_or_file(arg));
}

std::vector<Rat> vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("vector JSON: expected array");
  std::vector<Rat> v;
  for (const auto& c : j) {
    if (c.is_string())
      v.push_back(parse_rational(c.get<std::string>()));
    else
      v.push_back(Rat(Int(c.get<long long>())));
  }
  return v;
}

Json vector_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_str(x));
  return a;
}

std::vector<Rat> parse_vector_arg(const std::string& arg) {
  return vector_from_json(json_from_text_or_file(arg));
}

}  // namespace lielat
