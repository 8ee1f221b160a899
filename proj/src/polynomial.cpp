#include <algorithm>
#include <functional>

#include <json.hpp>

#include "octic/error.hpp"
#include "octic/monomial_table.hpp"

namespace octic {

int weighted_degree(const Exponents& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += kGeneratorWeights[i] * e[i];
  return w;
}

std::string monomial_name(const Exponents& e, std::string_view prefix) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += std::string(prefix) + std::to_string(kGeneratorWeights[i]);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Exponents> enumerate_monomials(int weight) {
  std::vector<Exponents> out;
  if (weight < 0) return out;
  Exponents current{};
  std::function<void(std::size_t, int)> rec = [&](std::size_t index, int remaining) {
    if (index == current.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int w = kGeneratorWeights[index];
    for (int e = remaining / w; e >= 0; --e) {
      current[index] = e;
      rec(index + 1, remaining - e * w);
    }
    current[index] = 0;
  };
  rec(0, weight);
  return out;
}

bool is_standard_monomial(const Exponents& e) {
  const int e8 = e[6], e9 = e[7], e10 = e[8];
  return !(e8 >= 2 || (e8 && e9) || (e8 && e10) || (e9 && e10) || e10 >= 2);
}

std::vector<Exponents> monomial_basis(int weight) {
  std::vector<Exponents> out = enumerate_monomials(weight);
  std::erase_if(out, [](const Exponents& e) { return !is_standard_monomial(e); });
  return out;
}

Rational evaluate_monomial(const Exponents& e, const std::array<Rational, 9>& values) {
  Rational out(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i]) out *= pow(values[i], e[i]);
  }
  return out;
}

WeightedMonomialTable::WeightedMonomialTable(int weight, std::vector<Term> terms)
    : weight_(weight), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const Term& t) { return t.coefficient.is_zero(); });
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponents > b.exponents; });
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& e = terms_[i].exponents;
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
      throw Error(ErrorCode::InvalidArgument, "negative exponent in monomial table");
    }
    if (weighted_degree(e) != weight_) {
      throw Error(ErrorCode::InvalidArgument,
                  "monomial " + monomial_name(e, "X") + " has weight " +
                      std::to_string(weighted_degree(e)) + ", table weight " + std::to_string(weight_));
    }
    if (i && terms_[i - 1].exponents == e) {
      throw Error(ErrorCode::InvalidArgument, "repeated monomial " + monomial_name(e, "X"));
    }
  }
}

Rational WeightedMonomialTable::coefficient(const Exponents& e) const {
  for (const auto& t : terms_) {
    if (t.exponents == e) return t.coefficient;
  }
  return Rational(0);
}

Rational WeightedMonomialTable::evaluate(const std::array<Rational, 9>& values) const {
  Rational out(0);
  for (const auto& t : terms_) out += t.coefficient * evaluate_monomial(t.exponents, values);
  return out;
}

std::string WeightedMonomialTable::to_json() const {
  nlohmann::ordered_json j;
  j["weight"] = weight_;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : terms_) {
    nlohmann::ordered_json term;
    term["exponents"] = t.exponents;
    term["coefficient"] = t.coefficient.to_string();
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

WeightedMonomialTable WeightedMonomialTable::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto ex = t.at("exponents").get<std::vector<int>>();
      if (ex.size() != 9) throw Error(ErrorCode::InvalidArgument, "exponent vectors have 9 entries");
      Exponents e{};
      std::copy(ex.begin(), ex.end(), e.begin());
      terms.push_back({e, Rational::parse(t.at("coefficient").get<std::string>())});
    }
    return WeightedMonomialTable(j.at("weight").get<int>(), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed table JSON: ") + e.what());
  }
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::variable(int k) {
  Polynomial p;
  Exponents e{};
  e.at(static_cast<std::size_t>(k - 2)) = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.add_term(Exponents{}, c);
  return p;
}

Polynomial Polynomial::from_table(const WeightedMonomialTable& t) {
  Polynomial p;
  for (const auto& term : t.terms()) p.add_term(term.exponents, term.coefficient);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::substitute(const std::array<Polynomial, 9>& images) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    }
    out += term;
  }
  return out;
}

WeightedMonomialTable Polynomial::to_table(int weight) const {
  std::vector<Term> terms;
  for (const auto& [e, c] : terms_) terms.push_back({e, c});
  return WeightedMonomialTable(weight, std::move(terms));
}

}  // namespace octic
