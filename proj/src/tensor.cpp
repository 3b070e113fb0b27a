#include "invmm/tensor.hpp"

#include "json.hpp"

#include "invmm/errors.hpp"

namespace invmm {

int BasisIndex::encode() const {
  int code = 0;
  int scale = 1;
  for (const auto &[i, j] : pairs) {
    code += (j - 1) * scale + (i - 1) * scale * 3;
    scale *= 9;
  }
  return code;
}

BasisIndex BasisIndex::decode(int code) {
  BasisIndex a;
  for (auto &[i, j] : a.pairs) {
    j = code % 3 + 1;
    code /= 3;
    i = code % 3 + 1;
    code /= 3;
  }
  return a;
}

std::string to_string(const BasisIndex &a) {
  std::string s;
  for (const auto &[i, j] : a.pairs) {
    if (!s.empty())
      s += ',';
    s += static_cast<char>('0' + i);
    s += static_cast<char>('0' + j);
  }
  return s;
}

BasisIndex parse_index(const std::string &text) {
  BasisIndex a;
  if (text.size() != 8 || text[2] != ',' || text[5] != ',')
    throw ParseError("bad basis index '" + text + "'");
  for (int k = 0; k < 3; ++k) {
    const int i = text[3 * k] - '0';
    const int j = text[3 * k + 1] - '0';
    if (i < 1 || i > 3 || j < 1 || j > 3)
      throw ParseError("bad basis index '" + text + "'");
    a.pairs[k] = {i, j};
  }
  return a;
}

bool index_is_even(const BasisIndex &a) {
  std::array<int, 4> count{};
  for (const auto &[i, j] : a.pairs) {
    ++count[i];
    ++count[j];
  }
  return count[1] % 2 == 0 && count[2] % 2 == 0 && count[3] % 2 == 0;
}

bool index_is_diagonal(const BasisIndex &a) {
  for (const auto &[i, j] : a.pairs)
    if (i != j)
      return false;
  return true;
}

FactorMatrix FactorMatrix::unit(int row, int col) {
  FactorMatrix m;
  m.at(row, col) = Polynomial(1);
  return m;
}

FactorMatrix FactorMatrix::transpose() const {
  FactorMatrix t;
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c)
      t.at(c, r) = at(r, c);
  return t;
}

FactorMatrix &FactorMatrix::operator+=(const FactorMatrix &o) {
  for (int k = 0; k < 9; ++k)
    entries[k] += o.entries[k];
  return *this;
}

FactorMatrix operator*(const Polynomial &s, FactorMatrix x) {
  for (auto &e : x.entries)
    e = s * e;
  return x;
}

FactorMatrix operator*(const FactorMatrix &x, const FactorMatrix &y) {
  FactorMatrix r;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        if (!x.at(i, k).is_zero() && !y.at(k, j).is_zero())
          r.at(i, j) += x.at(i, k) * y.at(k, j);
  return r;
}

Tensor Tensor::basis(const BasisIndex &a, Polynomial coeff) {
  Tensor t;
  t.add(a, coeff);
  return t;
}

Polynomial Tensor::at(const BasisIndex &a) const {
  auto it = entries_.find(a.encode());
  return it == entries_.end() ? Polynomial() : it->second;
}

void Tensor::add(int code, const Polynomial &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = entries_.try_emplace(code, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      entries_.erase(it);
  }
}

Tensor &Tensor::operator+=(const Tensor &t) {
  for (const auto &[code, c] : t.entries_)
    add(code, c);
  return *this;
}

Tensor &Tensor::operator-=(const Tensor &t) {
  for (const auto &[code, c] : t.entries_)
    add(code, -c);
  return *this;
}

Tensor Tensor::scaled(const Polynomial &c) const {
  Tensor r;
  if (c.is_zero())
    return r;
  for (const auto &[code, coeff] : entries_)
    r.add(code, coeff * c);
  return r;
}

Tensor Tensor::substitute(const std::map<Var, Cyclotomic> &assignment) const {
  Tensor r;
  for (const auto &[code, coeff] : entries_)
    r.add(code, coeff.substitute(assignment));
  return r;
}

std::strong_ordering operator<=>(const Tensor &x, const Tensor &y) {
  auto i = x.entries_.begin();
  auto j = y.entries_.begin();
  for (; i != x.entries_.end() && j != y.entries_.end(); ++i, ++j) {
    if (auto c = i->first <=> j->first; c != 0)
      return c;
    if (auto c = i->second <=> j->second; c != 0)
      return c;
  }
  if (i == x.entries_.end())
    return j == y.entries_.end() ? std::strong_ordering::equal : std::strong_ordering::less;
  return std::strong_ordering::greater;
}

Tensor tensor_from_factors(const FactorMatrix &x, const FactorMatrix &y, const FactorMatrix &z) {
  Tensor t;
  for (int a = 0; a < 9; ++a) {
    if (x.entries[a].is_zero())
      continue;
    for (int b = 0; b < 9; ++b) {
      if (y.entries[b].is_zero())
        continue;
      const Polynomial xy = x.entries[a] * y.entries[b];
      for (int c = 0; c < 9; ++c) {
        if (z.entries[c].is_zero())
          continue;
        // row-major entry k of a factor is the pair (k / 3 + 1, k % 3 + 1)
        const BasisIndex idx{{{{a / 3 + 1, a % 3 + 1}, {b / 3 + 1, b % 3 + 1}, {c / 3 + 1, c % 3 + 1}}}};
        t.add(idx, xy * z.entries[c]);
      }
    }
  }
  return t;
}

Tensor pi12(const Tensor &t) {
  Tensor r;
  for (const auto &[code, c] : t.entries()) {
    BasisIndex a = BasisIndex::decode(code);
    std::swap(a.pairs[0], a.pairs[1]);
    r.add(a, c);
  }
  return r;
}

std::string tensor_to_json(const Tensor &t, int indent) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto &[code, c] : t.entries()) {
    const BasisIndex a = BasisIndex::decode(code);
    nlohmann::ordered_json idx = nlohmann::ordered_json::array();
    for (const auto &[i, j] : a.pairs)
      idx.push_back({i, j});
    entries.push_back({{"idx", idx}, {"coeff", to_string(c)}});
  }
  nlohmann::ordered_json doc;
  doc["entries"] = entries;
  return doc.dump(indent);
}

Tensor tensor_from_json(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("tensor json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("tensor json: missing \"entries\" array");
  Tensor t;
  for (const auto &e : doc["entries"]) {
    if (!e.is_object() || !e.contains("idx") || !e.contains("coeff") || !e["coeff"].is_string())
      throw ParseError("tensor json: entry needs \"idx\" and string \"coeff\"");
    const auto &idx = e["idx"];
    if (!idx.is_array() || idx.size() != 3)
      throw ParseError("tensor json: \"idx\" must hold three pairs");
    BasisIndex a;
    for (int k = 0; k < 3; ++k) {
      const auto &pr = idx[k];
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer())
        throw ParseError("tensor json: bad index pair");
      const int i = pr[0].get<int>();
      const int j = pr[1].get<int>();
      if (i < 1 || i > 3 || j < 1 || j > 3)
        throw ParseError("tensor json: index component out of range");
      a.pairs[k] = {i, j};
    }
    t.add(a, parse_polynomial(e["coeff"].get<std::string>()));
  }
  return t;
}

} // namespace invmm
