#include "toda/polynomial.hpp"

#include "toda/paths.hpp"

#include <functional>
#include <numeric>
#include <ranges>
#include <sstream>

namespace toda {

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) {
    e.pop_back();
  }
}

}  // namespace

unsigned degree(const Exponents& exponents) {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Polynomial Polynomial::constant(const Integer& c) { return monomial({}, c); }

Polynomial Polynomial::variable(std::size_t index) {
  Exponents e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents exponents, const Integer& c) {
  Polynomial p;
  p.add_term(std::move(exponents), c);
  return p;
}

void Polynomial::add_term(Exponents exponents, const Integer& c) {
  if (c == 0) {
    return;
  }
  trim(exponents);
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

bool Polynomial::is_homogeneous(unsigned d) const {
  for (const auto& [e, c] : terms_) {
    if (degree(e) != d) {
      return false;
    }
  }
  return true;
}

bool Polynomial::has_positive_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c <= 0) {
      return false;
    }
  }
  return true;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0 && i >= values.size()) {
        throw DataExhaustedError("polynomial needs a_" + std::to_string(i));
      }
      for (unsigned k = 0; k < e[i]; ++k) {
        term *= values[i];
      }
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  // leading variables first
  for (const auto& [e, c] : std::views::reverse(terms_)) {
    Integer mag = abs(c);
    if (first) {
      out << (c < 0 ? "-" : "");
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || e.empty()) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      out << (wrote ? "*" : "") << 'a' << i;
      if (e[i] > 1) {
        out << '^' << e[i];
      }
      wrote = true;
    }
  }
  return out.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    add_term(e, c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    add_term(e, -c);
  }
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      Exponents e(std::max(e1.size(), e2.size()), 0);
      for (std::size_t i = 0; i < e1.size(); ++i) {
        e[i] += e1[i];
      }
      for (std::size_t i = 0; i < e2.size(); ++i) {
        e[i] += e2[i];
      }
      out.add_term(std::move(e), c1 * c2);
    }
  }
  return out;
}

Polynomial symbolic_moment(std::size_t n) {
  if (n == 0) {
    return Polynomial::constant(1);
  }
  Polynomial sum;
  Exponents e;
  std::function<void(std::size_t, std::size_t)> nested = [&](std::size_t depth, std::size_t k) {
    if (e.size() <= k) {
      e.resize(k + 1, 0);
    }
    ++e[k];
    if (depth + 1 == n) {
      sum += Polynomial::monomial(e);
    } else {
      for (std::size_t next = 0; next <= k + 1; ++next) {
        nested(depth + 1, next);
      }
    }
    --e[k];
  };
  nested(0, 0);
  return sum;
}

Polynomial symbolic_tau_gv(std::size_t t, std::size_t n) {
  Polynomial sum;
  for (const auto& family : enumerate_families(t, n, false)) {
    Exponents e;
    for (const auto& path : family.paths) {
      const auto profile = level_profile(path);
      if (e.size() < profile.size()) {
        e.resize(profile.size(), 0);
      }
      for (std::size_t l = 0; l < profile.size(); ++l) {
        e[l] += profile[l];
      }
    }
    sum += Polynomial::monomial(std::move(e));
  }
  return sum;
}

namespace {

Polynomial cofactor_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t size = m.size();
  if (size == 0) {
    return Polynomial::constant(1);
  }
  if (size == 1) {
    return m[0][0];
  }
  Polynomial det;
  for (std::size_t col = 0; col < size; ++col) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < size; ++c) {
        if (c != col) {
          row.push_back(m[r][c]);
        }
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * cofactor_determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

Polynomial symbolic_tau_hankel(std::size_t t, std::size_t n) {
  std::vector<Polynomial> moments;
  for (std::size_t m = 0; m + 2 <= t + 2 * n; ++m) {
    moments.push_back(symbolic_moment(m));
  }
  std::vector<std::vector<Polynomial>> matrix(n, std::vector<Polynomial>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      matrix[j][k] = moments[t + j + k];
    }
  }
  return cofactor_determinant(matrix);
}

}  // namespace toda
