#include "opran/serialize.hpp"

#include <fstream>

#include "opran/errors.hpp"

namespace opran {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::uint64_t require_count(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  // signed storage is fine as long as the value is nonnegative
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(where + ": expected a nonnegative integer");
  return static_cast<std::uint64_t>(j.get<std::int64_t>());
}

std::int64_t require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

Rational rational_from_pair(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(where + ": expected [numerator, denominator]");
  std::int64_t num = require_int(j[0], where + "[0]");
  std::int64_t den = require_int(j[1], where + "[1]");
  if (den == 0) throw ParseError(where + ": zero denominator");
  return Rational(num, den);
}

double require_double(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

}  // namespace

Json cardinal_to_json(Cardinal c) {
  return c.is_finite() ? Json{{"fin", c.value()}} : Json{{"aleph", c.value()}};
}

Cardinal cardinal_from_json(const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("fin") && !j.contains("aleph"))
    return Cardinal::finite(require_count(j.at("fin"), where + ".fin"));
  if (j.is_object() && j.contains("aleph") && !j.contains("fin"))
    return Cardinal::aleph(require_count(j.at("aleph"), where + ".aleph"));
  throw ParseError(where + ": expected {\"fin\": n} or {\"aleph\": k}");
}

Json dimseq_to_json(const DimSeq& s) {
  Json prefix = Json::array();
  for (Cardinal c : s.prefix()) prefix.push_back(cardinal_to_json(c));
  return Json{{"prefix", std::move(prefix)}, {"tail", cardinal_to_json(s.tail())}};
}

DimSeq dimseq_from_json(const Json& j, const std::string& where) {
  const Json& prefix = require(j, "prefix", where);
  if (!prefix.is_array()) throw ParseError(where + ".prefix: expected an array");
  std::vector<Cardinal> entries;
  entries.reserve(prefix.size());
  for (std::size_t i = 0; i < prefix.size(); ++i)
    entries.push_back(
        cardinal_from_json(prefix[i], where + ".prefix[" + std::to_string(i) + "]"));
  return DimSeq(std::move(entries), cardinal_from_json(require(j, "tail", where), where + ".tail"));
}

Json range_rep_to_json(const RangeRep& r) {
  return Json{{"perp", cardinal_to_json(r.perp_dim())}, {"shells", dimseq_to_json(r.shells())}};
}

RangeRep range_rep_from_json(const Json& j, const std::string& where) {
  return RangeRep(cardinal_from_json(require(j, "perp", where), where + ".perp"),
                  dimseq_from_json(require(j, "shells", where), where + ".shells"));
}

Json seqvector_to_json(const SeqVector& v) {
  Json head = Json::array();
  for (const RationalComplex& z : v.head())
    head.push_back(Json::array({static_cast<std::int64_t>(numerator(z.re)),
                                static_cast<std::int64_t>(denominator(z.re)),
                                static_cast<std::int64_t>(numerator(z.im)),
                                static_cast<std::int64_t>(denominator(z.im))}));
  Json tail;
  if (v.has_tail())
    tail = Json{{"a", Json::array({static_cast<std::int64_t>(numerator(v.tail_amplitude())),
                                   static_cast<std::int64_t>(denominator(v.tail_amplitude()))})},
                {"r", Json::array({static_cast<std::int64_t>(numerator(v.tail_ratio())),
                                   static_cast<std::int64_t>(denominator(v.tail_ratio()))})}};
  return Json{{"head", std::move(head)}, {"tail", std::move(tail)}};
}

SeqVector seqvector_from_json(const Json& j, const std::string& where) {
  const Json& head = require(j, "head", where);
  if (!head.is_array()) throw ParseError(where + ".head: expected an array");
  std::vector<RationalComplex> entries;
  entries.reserve(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) {
    const Json& e = head[i];
    std::string at = where + ".head[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 4)
      throw ParseError(at + ": expected [re_num, re_den, im_num, im_den]");
    std::int64_t re_den = require_int(e[1], at + "[1]");
    std::int64_t im_den = require_int(e[3], at + "[3]");
    if (re_den == 0 || im_den == 0) throw ParseError(at + ": zero denominator");
    entries.push_back(RationalComplex{Rational(require_int(e[0], at + "[0]"), re_den),
                                      Rational(require_int(e[2], at + "[2]"), im_den)});
  }
  const Json& tail = require(j, "tail", where);
  if (tail.is_null()) return SeqVector(std::move(entries));
  if (!tail.is_object()) throw ParseError(where + ".tail: expected null or an object");
  Rational a = rational_from_pair(require(tail, "a", where + ".tail"), where + ".tail.a");
  Rational r = rational_from_pair(require(tail, "r", where + ".tail"), where + ".tail.r");
  if (a < 0) throw ParseError(where + ".tail.a: amplitude must be nonnegative");
  if (r < 0 || r >= 1) throw ParseError(where + ".tail.r: ratio must lie in [0, 1)");
  return SeqVector(std::move(entries), std::move(a), std::move(r));
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (const Complex& z : m.data()) data.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  auto rows = require_count(require(j, "rows", where), where + ".rows");
  auto cols = require_count(require(j, "cols", where), where + ".cols");
  const Json& data = require(j, "data", where);
  if (!data.is_array()) throw ParseError(where + ".data: expected an array");
  if (data.size() != rows * cols)
    throw ParseError(where + ".data: expected rows * cols entries");
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Json& e = data[i];
    std::string at = where + ".data[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) throw ParseError(at + ": expected [re, im]");
    entries.emplace_back(require_double(e[0], at + "[0]"), require_double(e[1], at + "[1]"));
  }
  try {
    return ComplexMatrix::from_data(rows, cols, std::move(entries));
  } catch (const ContractError& err) {
    throw ParseError(where + ": " + err.what());
  }
}

Json numeric_range_rep_to_json(const NumericRangeRep& r) {
  Json shells = Json::array();
  for (const Subspace& s : r.shells) shells.push_back(matrix_to_json(s.frame()));
  return Json{{"scale_shift", r.scale_shift},
              {"shell_dims", r.shell_dims()},
              {"kernel_dim", r.kernel.dim()},
              {"shells", std::move(shells)},
              {"kernel", matrix_to_json(r.kernel.frame())}};
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace opran
