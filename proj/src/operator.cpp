#include "chw/operator.hpp"

#include "chw/error.hpp"
#include "chw/text.hpp"

namespace chw {

namespace {

int base_generators(const Ambient& amb) { return amb.sl() ? amb.n - 1 : amb.n; }

int pair_count(int n) { return n * (n - 1) / 2; }

// Image of generator g under conjugation by w, as (generator, coefficient).
std::vector<std::pair<int, int>> generator_image(const Ambient& amb, const Permutation& w, int g) {
  if (g >= base_generators(amb)) return {{g, 1}};
  if (!amb.sl()) return {{w(g), 1}};
  const int last = amb.n - 1;
  std::vector<std::pair<int, int>> out;
  if (w(g) != last) out.emplace_back(w(g), 1);
  if (w(last) != last) out.emplace_back(w(last), -1);
  return out;
}

using DerivPoly = std::map<DerivMono, long>;

// w . D^m as a polynomial in the generators.
DerivPoly permute_derivation(const Ambient& amb, const Permutation& w, const DerivMono& m) {
  const int count = derivation_count(amb);
  DerivPoly acc{{DerivMono(count, 0), 1}};
  for (int g = 0; g < count; ++g) {
    if (m[g] == 0) continue;
    auto image = generator_image(amb, w, g);
    for (int rep = 0; rep < m[g]; ++rep) {
      DerivPoly next;
      for (const auto& [mono, c] : acc)
        for (const auto& [h, s] : image) {
          DerivMono k = mono;
          ++k[h];
          long& slot = next[k];
          slot += c * s;
          if (slot == 0) next.erase(k);
        }
      acc = std::move(next);
    }
  }
  return acc;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LaurentPoly times_roots(LaurentPoly p, const Ambient& amb, const std::vector<int>& powers) {
  const auto& pairs = root_pairs(amb.n);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (powers[k] == 0) continue;
    LaurentPoly d = root_difference(amb, pairs[k].first, pairs[k].second);
    for (int r = 0; r < powers[k]; ++r) p = p * d;
  }
  return p;
}

}  // namespace

int derivation_count(const Ambient& amb) { return base_generators(amb) + amb.extra; }

long generator_eigenvalue(const Ambient& amb, int g, const Exponent& e) {
  const int base = base_generators(amb);
  if (g >= base) return e[amb.n + (g - base)];
  if (amb.sl()) return static_cast<long>(e[g]) - e[amb.n - 1];
  return e[g];
}

LaurentPoly apply_generator(int g, const LaurentPoly& f) {
  LaurentPoly r(f.ambient());
  for (const auto& [e, c] : f.terms()) {
    long ev = generator_eigenvalue(f.ambient(), g, e);
    if (ev != 0) r.add_term(e, c * RationalFunction(Rational(ev)));
  }
  return r;
}

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

const std::vector<std::pair<int, int>>& root_pairs(int n) {
  static thread_local std::map<int, std::vector<std::pair<int, int>>> cache;
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) it->second.emplace_back(i, j);
  return it->second;
}

// ------------------------------------------------------------ LocalizedCoeff

LocalizedCoeff::LocalizedCoeff(Ambient amb) : num_(amb), den_(pair_count(amb.n), 0) {}

LocalizedCoeff::LocalizedCoeff(LaurentPoly numerator)
    : num_(std::move(numerator)), den_(pair_count(num_.ambient().n), 0) {}

LocalizedCoeff::LocalizedCoeff(LaurentPoly numerator, std::vector<int> denominators)
    : num_(std::move(numerator)), den_(std::move(denominators)) {
  if (static_cast<int>(den_.size()) != pair_count(num_.ambient().n))
    throw DomainError("denominator vector has wrong length");
  reduce();
}

void LocalizedCoeff::reduce() {
  if (num_.is_zero()) {
    std::fill(den_.begin(), den_.end(), 0);
    return;
  }
  const auto& pairs = root_pairs(num_.ambient().n);
  for (std::size_t p = 0; p < den_.size(); ++p) {
    while (den_[p] > 0) {
      auto q = num_.divide_by_difference(pairs[p].first, pairs[p].second);
      if (!q) break;
      num_ = std::move(*q);
      --den_[p];
    }
  }
}

bool LocalizedCoeff::is_polynomial() const {
  for (int e : den_)
    if (e) return false;
  return true;
}

LocalizedCoeff LocalizedCoeff::sum(const std::vector<LocalizedCoeff>& parts, const Ambient& amb) {
  std::vector<LocalizedCoeff> nonzero;
  for (const auto& p : parts)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) return LocalizedCoeff(amb);
  if (nonzero.size() == 1) return nonzero.front();
  std::vector<int> top(pair_count(amb.n), 0);
  for (const auto& p : nonzero)
    for (std::size_t k = 0; k < top.size(); ++k) top[k] = std::max(top[k], p.den_[k]);
  LaurentPoly num(amb);
  for (const auto& p : nonzero) {
    std::vector<int> missing(top.size());
    for (std::size_t k = 0; k < top.size(); ++k) missing[k] = top[k] - p.den_[k];
    num += times_roots(p.num_, amb, missing);
  }
  return LocalizedCoeff(std::move(num), std::move(top));
}

LocalizedCoeff operator+(const LocalizedCoeff& a, const LocalizedCoeff& b) {
  return LocalizedCoeff::sum({a, b}, a.ambient());
}

LocalizedCoeff operator-(const LocalizedCoeff& a, const LocalizedCoeff& b) { return a + (-b); }

LocalizedCoeff LocalizedCoeff::operator-() const {
  LocalizedCoeff r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalizedCoeff LocalizedCoeff::scaled(const RationalFunction& c) const {
  LocalizedCoeff r = *this;
  r.num_ = r.num_.scaled(c);
  if (r.num_.is_zero()) std::fill(r.den_.begin(), r.den_.end(), 0);
  return r;
}

LocalizedCoeff operator*(const LocalizedCoeff& a, const LocalizedCoeff& b) {
  if (a.is_zero() || b.is_zero()) return LocalizedCoeff(a.ambient());
  std::vector<int> den(a.den_.size());
  for (std::size_t k = 0; k < den.size(); ++k) den[k] = a.den_[k] + b.den_[k];
  return LocalizedCoeff(a.num_ * b.num_, std::move(den));
}

LocalizedCoeff LocalizedCoeff::act(const Permutation& w) const {
  const int n = ambient().n;
  const auto& pairs = root_pairs(n);
  LocalizedCoeff r(ambient());
  r.num_ = num_.act(w);
  int sign_flips = 0;
  for (std::size_t p = 0; p < den_.size(); ++p) {
    if (den_[p] == 0) continue;
    int a = w(pairs[p].first), b = w(pairs[p].second);
    if (a > b) sign_flips += den_[p];
    r.den_[pair_index(n, a, b)] = den_[p];
  }
  if (sign_flips % 2) r.num_ = -r.num_;
  return r;
}

LocalizedCoeff LocalizedCoeff::derive(int g) const {
  const Ambient& amb = ambient();
  if (is_polynomial()) return LocalizedCoeff(apply_generator(g, num_));
  const auto& pairs = root_pairs(amb.n);
  // g(N/D) = (g(N) P - N sum_p e_p g(d_p) P/d_p) / (D P),  P = prod_{e_p>0} d_p
  std::vector<int> support(den_.size(), 0);
  for (std::size_t p = 0; p < den_.size(); ++p) support[p] = den_[p] > 0;
  LaurentPoly top = times_roots(apply_generator(g, num_), amb, support);
  for (std::size_t p = 0; p < den_.size(); ++p) {
    if (!den_[p]) continue;
    LaurentPoly dp = apply_generator(g, root_difference(amb, pairs[p].first, pairs[p].second));
    if (dp.is_zero()) continue;
    std::vector<int> others = support;
    others[p] = 0;
    top -= times_roots(num_ * dp, amb, others).scaled(Rational(den_[p]));
  }
  std::vector<int> den(den_.size());
  for (std::size_t p = 0; p < den.size(); ++p) den[p] = den_[p] + support[p];
  return LocalizedCoeff(std::move(top), std::move(den));
}

LocalizedCoeff LocalizedCoeff::rereduced() const {
  std::vector<int> doubled = den_;
  for (auto& e : doubled) e *= 2;
  return LocalizedCoeff(times_roots(num_, ambient(), den_), std::move(doubled));
}

std::string LocalizedCoeff::str() const {
  std::string num = format_laurent(num_);
  if (is_polynomial()) return num;
  std::string den;
  const auto& pairs = root_pairs(ambient().n);
  for (std::size_t p = 0; p < den_.size(); ++p) {
    if (!den_[p]) continue;
    if (!den.empty()) den += '*';
    den += "(x" + std::to_string(pairs[p].first + 1) + "-x" + std::to_string(pairs[p].second + 1) + ")";
    if (den_[p] > 1) den += "^" + std::to_string(den_[p]);
  }
  return "(" + num + ")/(" + den + ")";
}

// ---------------------------------------------------------------- OperatorNF

OperatorNF OperatorNF::identity(const Ambient& amb) {
  return scalar(amb, RationalFunction(1));
}

OperatorNF OperatorNF::scalar(const Ambient& amb, const RationalFunction& c) {
  return multiplication(LocalizedCoeff(LaurentPoly::constant(amb, c)));
}

OperatorNF OperatorNF::multiplication(const LocalizedCoeff& c) {
  const Ambient& amb = c.ambient();
  OperatorNF op(amb);
  op.add_term({Permutation::identity(amb.n), DerivMono(derivation_count(amb), 0)}, c);
  return op;
}

OperatorNF OperatorNF::permutation(const Ambient& amb, const Permutation& w) {
  OperatorNF op(amb);
  op.add_term({w, DerivMono(derivation_count(amb), 0)},
              LocalizedCoeff(LaurentPoly::constant(amb, 1)));
  return op;
}

OperatorNF OperatorNF::generator(const Ambient& amb, int g) {
  OperatorNF op(amb);
  DerivMono m(derivation_count(amb), 0);
  m.at(g) = 1;
  op.add_term({Permutation::identity(amb.n), m}, LocalizedCoeff(LaurentPoly::constant(amb, 1)));
  return op;
}

OperatorNF OperatorNF::derivation_along(const Ambient& amb, const std::vector<Rational>& y) {
  if (static_cast<int>(y.size()) != amb.n) throw DomainError("Cartan vector has wrong length");
  OperatorNF op(amb);
  if (amb.sl()) {
    Rational total;
    for (const auto& v : y) total += v;
    if (!total.is_zero()) throw DomainError("not in t: coordinates must sum to 0");
    for (int k = 0; k + 1 < amb.n; ++k)
      op += generator(amb, k).scaled(y[k]);
  } else {
    for (int k = 0; k < amb.n; ++k) op += generator(amb, k).scaled(y[k]);
  }
  return op;
}

void OperatorNF::add_term(const OpKey& key, const LocalizedCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorNF& OperatorNF::operator+=(const OperatorNF& o) {
  if (!(amb_ == o.amb_)) throw DomainError("ambient mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OperatorNF& OperatorNF::operator-=(const OperatorNF& o) { return *this += -o; }

OperatorNF OperatorNF::operator-() const {
  OperatorNF r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

OperatorNF OperatorNF::scaled(const RationalFunction& c) const {
  OperatorNF r(amb_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [k, v] : r.terms_) v = v.scaled(c);
  return r;
}

OperatorNF operator*(const OperatorNF& a, const OperatorNF& b) {
  if (!(a.amb_ == b.amb_)) throw DomainError("ambient mismatch");
  const Ambient& amb = a.amb_;
  const int count = derivation_count(amb);
  std::map<OpKey, std::vector<LocalizedCoeff>> acc;

  for (const auto& [ka, ca] : a.terms_) {
    // Enumerate sub-multi-indices j <= ka.m once per left term.
    std::vector<DerivMono> subs{DerivMono(count, 0)};
    for (int g = 0; g < count; ++g) {
      std::vector<DerivMono> next;
      for (const auto& s : subs)
        for (int v = 0; v <= ka.m[g]; ++v) {
          DerivMono t = s;
          t[g] = v;
          next.push_back(std::move(t));
        }
      subs = std::move(next);
    }
    for (const auto& [kb, cb] : b.terms_) {
      const LocalizedCoeff moved = cb.act(ka.w);
      const DerivPoly expansion = permute_derivation(amb, ka.w, kb.m);
      const Permutation w = ka.w * kb.w;
      std::map<DerivMono, LocalizedCoeff> derivs;
      for (const auto& j : subs) {
        // D^j(moved), built up one generator at a time from a cached parent.
        LocalizedCoeff dj = moved;
        DerivMono built(count, 0);
        for (int g = 0; g < count; ++g)
          for (int r = 0; r < j[g]; ++r) {
            ++built[g];
            auto it = derivs.find(built);
            if (it != derivs.end()) {
              dj = it->second;
            } else {
              dj = dj.derive(g);
              derivs.emplace(built, dj);
            }
          }
        if (dj.is_zero()) continue;
        long binom = 1;
        for (int g = 0; g < count; ++g) binom *= binomial(ka.m[g], j[g]);
        LocalizedCoeff base = (ca * dj).scaled(Rational(binom));
        for (const auto& [mono, s] : expansion) {
          DerivMono m(count);
          for (int g = 0; g < count; ++g) m[g] = ka.m[g] - j[g] + mono[g];
          acc[{w, std::move(m)}].push_back(base.scaled(Rational(s)));
        }
      }
    }
  }
  OperatorNF r(amb);
  for (auto& [k, parts] : acc) {
    LocalizedCoeff c = LocalizedCoeff::sum(parts, amb);
    if (!c.is_zero()) r.terms_.emplace(k, std::move(c));
  }
  return r;
}

LaurentPoly OperatorNF::apply(const LaurentPoly& f) const {
  if (!(f.ambient() == amb_)) throw DomainError("ambient mismatch");
  std::vector<LocalizedCoeff> parts;
  const int count = derivation_count(amb_);
  for (const auto& [k, c] : terms_) {
    LaurentPoly moved = f.act(k.w);
    LaurentPoly derived(amb_);
    for (const auto& [e, v] : moved.terms()) {
      long factor = 1;
      for (int g = 0; g < count; ++g)
        for (int r = 0; r < k.m[g]; ++r) factor *= generator_eigenvalue(amb_, g, e);
      if (factor) derived.add_term(e, v * RationalFunction(Rational(factor)));
    }
    if (!derived.is_zero()) parts.push_back(c * LocalizedCoeff(derived));
  }
  LocalizedCoeff total = LocalizedCoeff::sum(parts, amb_);
  if (!total.is_polynomial()) throw DomainError("image not polynomial");
  return total.numerator();
}

std::string OperatorNF::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  const int base = amb_.sl() ? amb_.n - 1 : amb_.n;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += "\n";
    std::string t = "(" + c.str() + ")";
    for (std::size_t g = 0; g < k.m.size(); ++g) {
      if (!k.m[g]) continue;
      std::string name = static_cast<int>(g) >= base
                             ? "Dz" + (amb_.extra > 1 ? std::to_string(g - base + 1) : std::string())
                             : (amb_.sl() ? "d" : "D") + std::to_string(g + 1);
      t += "*" + name;
      if (k.m[g] > 1) t += "^" + std::to_string(k.m[g]);
    }
    if (!k.w.is_identity()) t += "*w" + k.w.str();
    out += t;
  }
  return out;
}

OperatorNF op_mul(const OperatorNF& a, const OperatorNF& b) { return a * b; }
LaurentPoly op_apply(const OperatorNF& a, const LaurentPoly& f) { return a.apply(f); }
bool op_is_zero(const OperatorNF& a) { return a.is_zero(); }
OperatorNF commutator(const OperatorNF& a, const OperatorNF& b) { return a * b - b * a; }

OperatorNF power(const OperatorNF& a, int e) {
  if (e < 0) throw DomainError("negative operator power");
  OperatorNF r = OperatorNF::identity(a.ambient());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace chw
