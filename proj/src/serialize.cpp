#include "qflag/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qflag {

using nlohmann::json;

std::string Report::text() const {
  std::ostringstream os;
  os << "== " << suite << " ==\n";
  for (const auto& it : items) {
    os << (it.pass ? "[PASS] " : "[FAIL] ") << it.name;
    if (!it.pass && !it.detail.empty()) os << "  (" << it.detail << ")";
    os << "\n";
  }
  os << (all_pass() ? "all checks passed" : "FAILURES present") << " (" << items.size()
     << " checks)\n";
  return os.str();
}

json report_to_json(const Report& rep) {
  json items = json::array();
  for (const auto& it : rep.items)
    items.push_back(json{{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
  return json{{"suite", rep.suite}, {"pass", rep.all_pass()}, {"checks", items}};
}

json laurent_to_json(const Laurent& x) {
  json arr = json::array();
  for (const auto& [e, c] : x.to_pairs()) arr.push_back(json::array({e, c}));
  return arr;
}

Laurent laurent_from_json(const json& j) {
  std::vector<std::pair<int, std::string>> pairs;
  for (const auto& item : j) pairs.emplace_back(item.at(0).get<int>(), item.at(1).get<std::string>());
  return Laurent::from_pairs(pairs);
}

json element_to_json(const AlgebraElement& e) {
  json arr = json::array();
  for (const auto& [w, c] : e.terms())
    arr.push_back(json::array({word_str(w, e.kind()), laurent_to_json(c)}));
  return arr;
}

AlgebraElement element_from_json(const json& j, int n) {
  std::map<Word, Laurent, WordLess> terms;
  Kind kind = Kind::ahol;
  for (const auto& item : j) {
    Kind k;
    Word w = word_from_str(item.at(0).get<std::string>(), &k);
    if (!w.empty()) kind = k;
    terms[w] = laurent_from_json(item.at(1));
  }
  return AlgebraElement::from_terms(n, kind, terms);
}

json representation_to_json(const Representation& rep) {
  json basis = json::array();
  for (const auto& b : rep.basis) basis.push_back(element_to_json(b));
  json matrices = json::object();
  for (const auto& [name, m] : rep.matrices) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(laurent_to_json(m(i, j)));
      rows.push_back(row);
    }
    matrices[name] = rows;
  }
  json weights = json::array();
  for (const auto& w : rep.weights) weights.push_back(w.w);
  return json{{"n", rep.n},       {"sigma", rep.sigma.sigma}, {"dimension", rep.dimension()},
              {"basis", basis},   {"matrices", matrices},     {"weights", weights}};
}

Representation representation_from_json(const json& j) {
  Representation rep;
  rep.n = j.at("n").get<int>();
  rep.sigma.sigma = j.at("sigma").get<std::vector<int>>();
  const int d = j.at("dimension").get<int>();
  for (const auto& b : j.at("basis")) rep.basis.push_back(element_from_json(b, rep.n));
  if (static_cast<int>(rep.basis.size()) != d)
    throw std::invalid_argument("dimension does not match basis size");
  for (const auto& [name, rows] : j.at("matrices").items()) {
    ScalarMatrix m(d, d);
    int i = 0;
    for (const auto& row : rows) {
      int k = 0;
      for (const auto& entry : row) m(i, k++) = laurent_from_json(entry);
      ++i;
    }
    rep.matrices.emplace(name, std::move(m));
  }
  for (const auto& w : j.at("weights")) rep.weights.push_back(Weight{w.get<std::vector<int>>()});
  return rep;
}

std::string representation_to_string(const Representation& rep) {
  return representation_to_json(rep).dump(2) + "\n";
}

void export_representation(const Representation& rep, const std::string& path) {
  const std::string payload = representation_to_string(rep);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << payload;
    if (!out.good()) {
      out.close();
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed for " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move " + tmp + " into place");
  }
}

Representation import_representation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in);
  return representation_from_json(j);
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail() { throw std::invalid_argument("bad scalar literal: " + s); }

  long integer() {
    skip();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail();
    return std::stol(s.substr(start, i - start));
  }

  // factor := 'q' ['^' int] | 'v' ['^' int] | rational
  Laurent factor() {
    skip();
    if (i < s.size() && (s[i] == 'q' || s[i] == 'v')) {
      bool is_q = s[i] == 'q';
      ++i;
      long e = 1;
      if (eat('^')) e = integer();
      return is_q ? Laurent::q(static_cast<int>(e)) : Laurent::v(static_cast<int>(e));
    }
    long num = integer();
    long den = 1;
    if (eat('/')) den = integer();
    if (den == 0) fail();
    Rational r(num, den);
    r.canonicalize();
    return Laurent(r);
  }

  Laurent term() {
    Laurent acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Laurent sum() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Laurent acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip();
      if (i >= s.size()) break;
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else fail();
    }
    return acc;
  }
};

}  // namespace

Laurent parse_laurent_expr(const std::string& text) {
  Parser p{text};
  Laurent r = p.sum();
  p.skip();
  if (p.i != text.size()) p.fail();
  return r;
}

}  // namespace qflag
