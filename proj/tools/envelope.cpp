#include "cli.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace schubert::cli {

json rational_json(const Rational& q) {
  return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Rational rational_from_json(const json& j) {
  const Integer num(j.at("num").get<std::string>());
  const Integer den(j.at("den").get<std::string>());
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  const Rational q(num, den);
  if (numerator(q) != num) throw std::invalid_argument("rational not in lowest terms");
  return q;
}

json partition_json(const Partition& lambda) {
  return json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json class_json(const ChowElement& a) {
  json terms = json::array();
  for (const auto& [index, c] : a.terms())
    terms.push_back({{"partition", partition_json(a.ring()->partition(index))},
                     {"coeff", rational_json(c)}});
  return terms;
}

ChowElement class_from_json(const ChowRingPtr& ring, const json& j) {
  ChowElement out = ChowElement::zero(ring);
  for (const auto& term : j)
    out += ChowElement::schubert(ring, partition_from_json(term.at("partition")),
                                 rational_from_json(term.at("coeff")));
  return out;
}

json report_json(const RobertsReport& report) {
  json records = json::array();
  for (const auto& r : report.records)
    records.push_back({{"degree", r.degree},
                       {"tau_index", r.homological_index},
                       {"is_zero", r.is_zero},
                       {"representative", class_json(r.representative)}});
  return json{{"verdict", report.verdict},
              {"witness_degree", report.witness ? json(*report.witness) : json(nullptr)},
              {"cone_dimension", report.cone_dimension},
              {"complete", report.complete},
              {"records", std::move(records)}};
}

json envelope(const std::vector<std::string>& command, json parameters, json result) {
  return json{{"command", command},
              {"parameters", std::move(parameters)},
              {"result", std::move(result)},
              {"engine_version", kEngineVersion},
              {"exact_arithmetic", true}};
}

Partition parse_partition(std::string_view text) {
  std::string body(text);
  auto trim = [](std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    s = first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
  };
  trim(body);
  if (body.size() >= 2 && ((body.front() == '[' && body.back() == ']') ||
                           (body.front() == '(' && body.back() == ')'))) {
    body = body.substr(1, body.size() - 2);
    trim(body);
  }
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    for (char c : token)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    if (token.size() > 6) throw std::invalid_argument("partition part too large");
    parts.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : body) {
    if (c == ',' || c == ' ' || c == '\t')
      flush();
    else
      token += c;
  }
  flush();
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
  }
}

ChowElement parse_class(const ChowRingPtr& ring, std::string_view text) {
  // Split on whitespace outside brackets.
  std::vector<std::string> terms;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth == 0 && (c == ' ' || c == '\t' || c == '+')) {
      if (!current.empty()) terms.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) terms.push_back(std::move(current));
  if (terms.empty()) throw std::invalid_argument("empty class expression");

  ChowElement out = ChowElement::zero(ring);
  for (const auto& term : terms) {
    const auto colon = term.rfind(':');
    const Partition lambda = parse_partition(term.substr(0, colon));
    const Rational coeff =
        colon == std::string::npos ? Rational(1) : parse_rational(term.substr(colon + 1));
    if (!fits_box(lambda, ring->shape()))
      throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the " +
                                  std::to_string(ring->shape().rows()) + "x" +
                                  std::to_string(ring->shape().cols()) + " box");
    out += ChowElement::schubert(ring, lambda, coeff);
  }
  return out;
}

std::string young_diagram(const Partition& lambda) {
  if (lambda.empty()) return "(empty)\n";
  std::string out;
  for (int row : lambda.parts()) {
    for (int k = 0; k < row; ++k) out += "□";
    out += '\n';
  }
  return out;
}

MatrixX<Rational> read_matrix(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::vector<std::string> row;
    for (std::string token; tokens >> token;) row.push_back(token);
    if (!row.empty()) lines.push_back(std::move(row));
  }
  if (lines.empty() || lines.front().size() != 1)
    throw std::invalid_argument("matrix file must start with a line holding the size k");
  const std::string& header = lines.front().front();
  if (header.empty() || header.size() > 4 ||
      header.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("matrix size must be a nonnegative integer");
  const int k = std::stoi(header);
  if (static_cast<int>(lines.size()) != k + 1)
    throw std::invalid_argument("expected " + std::to_string(k) + " matrix rows");
  MatrixX<Rational> m(k, k);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(lines[i + 1].size()) != k)
      throw std::invalid_argument("row " + std::to_string(i + 1) + " must hold " +
                                  std::to_string(k) + " entries");
    for (int j = 0; j < k; ++j) m(i, j) = parse_rational(lines[i + 1][j]);
  }
  return m;
}

ChowElement reduce_each_degree(const ChowElement& a) {
  ChowElement out = a.component(0);
  const HMatrixSet& hmats = a.ring()->h_matrices();
  for (int j = 1; j <= a.shape().dimension(); ++j)
    out += reduce_mod_h(a.component(j), hmats).representative;
  return out;
}

}  // namespace schubert::cli
