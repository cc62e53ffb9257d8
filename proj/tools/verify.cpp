#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <type_traits>
#include <utility>

#include "cli.hpp"
#include "sgr/grassmann.hpp"
#include "sgr/oracle.hpp"
#include "sgr/simplex.hpp"
#include "sgr/tableaux.hpp"

namespace sgr::cli {

namespace {

using Word = std::vector<std::uint32_t>;

std::string show(const BigInt& v) { return v.str(); }
std::string show(std::uint64_t v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }
std::string show(const Polynomial& p) { return format_polynomial(p, OutputFormat::plain); }
std::string show(std::span<const std::uint32_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}
std::string show(const Word& v) { return show(std::span<const std::uint32_t>(v)); }
std::string show(const LatticePoint& p) { return show(p.coords()); }
std::string show(const RowTableau& t) { return t.is_empty() ? "empty tableau" : "tableau " + show(t.entries()); }
std::string show(const BetaVector& b) { return show(b.entries()); }
std::string show(const Partition& p) { return show(p.parts()); }

void perturb(BigInt& v) { v += 1; }
void perturb(std::uint64_t& v) { ++v; }
void perturb(bool& v) { v = !v; }
void perturb(Polynomial& p) { p += Polynomial::constant(1); }
void perturb(Word& v) {
  if (v.empty()) {
    v.push_back(1);
  } else {
    ++v.front();
  }
}
void perturb(LatticePoint& p) {
  Word v(p.coords().begin(), p.coords().end());
  perturb(v);
  p = LatticePoint(std::move(v));
}
void perturb(RowTableau& t) {
  Word v(t.entries().begin(), t.entries().end());
  v.push_back(t.max_letter() + 1);
  t = RowTableau(std::move(v));
}
void perturb(BetaVector& b) {
  Word v(b.entries().begin(), b.entries().end());
  perturb(v);
  b = BetaVector(std::move(v));
}
void perturb(Partition& p) {
  Word v(p.parts().begin(), p.parts().end());
  perturb(v);
  p = Partition(std::move(v));
}

struct Failure {
  std::string message;
};

class Probe {
 public:
  explicit Probe(bool faulty) : faulty_(faulty) {}

  template <class T, class Ctx>
  void eq(T actual, const std::type_identity_t<T>& expected, Ctx&& ctx) {
    ++cases_;
    if (faulty_ && !fired_) {
      perturb(actual);
      fired_ = true;
    }
    if (!(actual == expected)) {
      throw Failure{ctx() + ": expected " + show(expected) + ", got " + show(actual)};
    }
  }

  template <class Ctx>
  void holds(bool condition, Ctx&& ctx) {
    eq(condition, true, std::forward<Ctx>(ctx));
  }

  std::size_t cases() const noexcept { return cases_; }

 private:
  bool faulty_;
  bool fired_ = false;
  std::size_t cases_ = 0;
};

std::string at(std::size_t d, std::size_t r) { return "d=" + std::to_string(d) + " r=" + std::to_string(r); }

Polynomial poly(oracle::Coeffs c) { return Polynomial(std::move(c)); }

Word to_word(std::span<const std::uint32_t> s) { return Word(s.begin(), s.end()); }

std::uint64_t u64(std::size_t v) { return static_cast<std::uint64_t>(v); }

void check_lattice_count(Probe& p, const VerifyOptions& o) {
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    const Polynomial series = ehrhart_generating_series(d, o.r_max);
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      const DilatedSimplex s(d, r);
      const BigInt expected = oracle::pascal_binomial(r + d, d);
      auto ctx = [&] { return at(d, r); };
      p.eq(count_lattice_points(s), expected, [&] { return ctx() + " count_lattice_points"; });
      const auto points = enumerate_lattice_points(s);
      p.eq(BigInt(points.size()), expected, [&] { return ctx() + " |lattice points|"; });
      p.eq(BigInt(enumerate_row_tableaux(d, r).size()), expected, [&] { return ctx() + " |row tableaux|"; });
      p.eq(BigInt(enumerate_box_partitions(d, r).size()), expected, [&] { return ctx() + " |box partitions|"; });
      p.eq(series.coeff(r), expected, [&] { return ctx() + " z^r coefficient of 1/(1-z)^(d+1)"; });
      const auto reference = oracle::simplex_points(d, r);
      for (std::size_t i = 0; i < std::min(points.size(), reference.size()); ++i) {
        p.eq(to_word(points[i].coords()), reference[i], [&] { return ctx() + " lexicographic point #" + std::to_string(i); });
      }
    }
  }
}

void check_slice_size(Probe& p, const VerifyOptions& o) {
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      const DilatedSimplex s(d, r);
      auto ctx = [&] { return at(d, r); };
      const auto classes = slice_classes(s, WeightVector::ones(d));
      const auto graded = oracle::grade(d, r, WeightVector::ones(d).weights());
      p.eq(u64(classes.size()), u64(r + 1), [&] { return ctx() + " number of slice classes"; });
      std::set<LatticePoint> seen;
      std::size_t total = 0;
      for (const auto& cls : classes) {
        const std::size_t k = cls.level;
        auto kctx = [&] { return ctx() + " k=" + std::to_string(k); };
        p.eq(BigInt(cls.points.size()), oracle::pascal_binomial(k + d - 1, d - 1),
             [&] { return kctx() + " |X_k| vs C(k+d-1, d-1)"; });
        p.eq(BigInt(cls.points.size()), graded.at(k), [&] { return kctx() + " |X_k| vs brute-force grading"; });
        p.holds(std::is_sorted(cls.points.begin(), cls.points.end()), [&] { return kctx() + " class is in lex order"; });
        for (const auto& pt : cls.points) {
          p.eq(pt.sum(), u64(k), [&] { return kctx() + " member " + show(pt) + " coordinate sum"; });
          seen.insert(pt);
        }
        total += cls.points.size();
      }
      p.eq(u64(seen.size()), u64(total), [&] { return ctx() + " classes pairwise disjoint"; });
      p.eq(BigInt(total), oracle::pascal_binomial(r + d, d), [&] { return ctx() + " union of classes"; });
      p.eq(classes.front().points.front(), LatticePoint(Word(d, 0)), [&] { return ctx() + " X_0 holds the origin"; });
      p.eq(u64(classes.front().points.size()), u64(1), [&] { return ctx() + " X_0 is a singleton"; });
      p.eq(dilation_polynomial(s), poly(graded), [&] { return ctx() + " dilation polynomial vs brute-force grading"; });
      p.eq(weighted_polynomial(s, WeightVector::ones(d)), dilation_polynomial(s),
           [&] { return ctx() + " weighted polynomial with weight (1,...,1)"; });
      const auto bigger = enumerate_lattice_points(DilatedSimplex(d, r + 1));
      for (const auto& pt : enumerate_lattice_points(s)) {
        p.holds(std::binary_search(bigger.begin(), bigger.end(), pt),
                [&] { return ctx() + " point " + show(pt) + " also lies in the next dilation"; });
      }
    }
  }
}

void check_dilation_series(Probe& p, const VerifyOptions& o) {
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    const BiSeries g = dilation_generating_series(d, o.r_max, o.r_max);
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      const DilatedSimplex s(d, r);
      p.eq(g.z_coefficient(r), dilation_polynomial(s),
           [&] { return at(d, r) + " z^r coefficient of 1/((1-z)(1-tz)^d)"; });
      p.eq(g.z_coefficient(r), poly(oracle::grade(d, r, WeightVector::ones(d).weights())),
           [&] { return at(d, r) + " z^r coefficient vs brute-force grading"; });
    }
  }
}

void check_filling_count(Probe& p, const VerifyOptions& o) {
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      auto ctx = [&] { return at(d, r); };
      const auto tableaux = enumerate_row_tableaux(d, r);
      const auto reference = oracle::row_tableaux(d, r);
      p.eq(u64(tableaux.size()), u64(reference.size()), [&] { return ctx() + " |d-filling set| vs brute force"; });
      for (std::size_t i = 0; i < std::min(tableaux.size(), reference.size()); ++i) {
        p.eq(to_word(tableaux[i].entries()), reference[i], [&] { return ctx() + " filling #" + std::to_string(i); });
      }
      oracle::Coeffs by_length(r + 1, 0);
      for (const auto& w : reference) by_length[w.size()] += 1;
      for (std::size_t k = 0; k <= r; ++k) {
        p.eq(count_ssyt_row(d, k), by_length[k], [&] { return ctx() + " k=" + std::to_string(k) + " product formula"; });
        p.eq(count_ssyt_row(d, k), oracle::pascal_binomial(k + d - 1, d - 1),
             [&] { return ctx() + " k=" + std::to_string(k) + " product formula vs C(k+d-1, d-1)"; });
      }
      p.eq(semistandard_polynomial(d, r), poly(by_length), [&] { return ctx() + " graded filling polynomial"; });
    }
  }
}

void check_tableau_bijection(Probe& p, const VerifyOptions& o) {
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      const DilatedSimplex s(d, r);
      auto ctx = [&] { return at(d, r); };
      for (const auto& t : enumerate_row_tableaux(d, r)) {
        const auto v = tableau_to_point(t, d);
        p.eq(point_to_tableau(v), t, [&] { return ctx() + " point_to_tableau(tableau_to_point(" + show(t) + "))"; });
        p.eq(v.sum(), u64(t.length()), [&] { return ctx() + " grading of " + show(t); });
      }
      const auto points = enumerate_lattice_points(s);
      for (const auto& v : points) {
        p.eq(tableau_to_point(point_to_tableau(v), d), v, [&] { return ctx() + " round trip of point " + show(v); });
      }
      p.eq(semistandard_polynomial(d, r), dilation_polynomial(s), [&] { return ctx() + " filling polynomial = dilation polynomial"; });
      const auto monomials = grassmannian_monomials(d, r);
      p.eq(u64(monomials.size()), u64(points.size()), [&] { return ctx() + " |Grassmannian monomials|"; });
      for (std::size_t i = 0; i < std::min(monomials.size(), points.size()); ++i) {
        p.eq(to_word(monomials[i].exponents()), to_word(points[i].coords()), [&] { return ctx() + " monomial #" + std::to_string(i); });
        p.holds(is_grassmannian_member(monomials[i], d, r + 1), [&] { return ctx() + " nesting into r+1"; });
        p.holds(minimal_grassmannian_index(monomials[i]) <= r, [&] { return ctx() + " minimal index <= r"; });
      }
    }
  }
}

void check_character(Probe& p, const VerifyOptions& o) {
  static const BigInt primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      const std::vector<BigInt> ones(d, 1);
      p.eq(character_evaluate(d, r, ones), oracle::pascal_binomial(r + d, d),
           [&] { return at(d, r) + " character at (1,...,1)"; });
      if (d > 3 || r > 5 || d > std::size(primes)) continue;
      std::vector<BigInt> values(primes, primes + d);
      const BigInt value = character_evaluate(d, r, values);
      p.eq(value, oracle::character_tableau_sum(d, r, values), [&] { return at(d, r) + " character vs tableau sum"; });
      p.eq(value, oracle::character_bialternant(d, r, values), [&] { return at(d, r) + " character vs bialternant"; });
      std::reverse(values.begin(), values.end());
      p.eq(character_evaluate(d, r, values), value, [&] { return at(d, r) + " character symmetric in its arguments"; });
    }
  }
}

void check_conjugacy(Probe& p, const VerifyOptions& o) {
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (const auto& pt : enumerate_lattice_points(DilatedSimplex(d, o.r_max))) {
      const auto a = pt.coords();
      auto ctx = [&] { return "a=" + show(a); };
      const Partition alpha = alpha_partition(a);
      const BetaVector beta = beta_partition(a);
      const Partition beta_stripped = beta.to_partition();
      p.eq(conjugate(alpha), beta_stripped, [&] { return ctx() + " conjugate(alpha)"; });
      p.eq(conjugate(beta_stripped), alpha, [&] { return ctx() + " conjugate(beta)"; });
      p.eq(Partition(oracle::transpose_diagram(alpha.parts())), beta_stripped, [&] { return ctx() + " diagram transpose"; });
      // sum (2k-1) lambda_k over the parts in their usual (decreasing) order.
      std::uint64_t odd = 0;
      for (std::size_t k = 0; k < alpha.length(); ++k) odd += (2 * k + 1) * std::uint64_t{alpha.parts()[k]};
      std::uint64_t squares = 0;
      for (auto b : beta.entries()) squares += std::uint64_t{b} * b;
      p.eq(odd, squares, [&] { return ctx() + " sum (2k-1) lambda_k = sum (lambda*_k)^2"; });
      const TriangularMatrix m = triangular_matrix(a);
      for (std::size_t k = 0; k < d; ++k) {
        p.eq(m.row_sum(k), u64(beta.entries()[k]), [&] { return ctx() + " row " + std::to_string(k + 1) + " sum"; });
        p.eq(m.column_sum(k), (k + 1) * std::uint64_t{a[k]}, [&] { return ctx() + " column " + std::to_string(k + 1) + " sum"; });
      }
      p.eq(exponent_from_beta(beta), to_word(a), [&] { return ctx() + " exponent_from_beta(beta)"; });
      p.eq(weight_of(a), beta.size(), [&] { return ctx() + " weight = |beta|"; });
      p.eq(weight_of(a), alpha.size(), [&] { return ctx() + " weight = |alpha|"; });
    }
  }
}

void check_self_conjugate(Probe& p, const VerifyOptions&) {
  auto family = [&](const char* label, std::size_t d, Word a) {
    auto ctx = [&] { return std::string(label) + " d=" + std::to_string(d) + " a=" + show(a); };
    const Partition alpha = alpha_partition(a);
    p.holds(is_self_conjugate(alpha), [&] { return ctx() + " alpha self-conjugate"; });
    p.eq(beta_partition(a).to_partition(), alpha, [&] { return ctx() + " alpha = beta"; });
  };
  for (std::size_t d = 1; d <= 8; ++d) family("t_1 t_2 ... t_d", d, Word(d, 1));
  for (std::size_t d = 2; d <= 8; d += 2) {
    Word a(d, 0);
    a[d / 2 - 1] = static_cast<std::uint32_t>(d / 2);
    a[d - 1] += static_cast<std::uint32_t>(d / 2);
    family("t_{d/2}^{d/2} t_d^{d/2}", d, a);
  }
  for (std::size_t d = 3; d <= 8; ++d) {
    Word a(d, 0);
    a[0] = static_cast<std::uint32_t>(d - 1);
    a[d - 1] = 1;
    family("t_1^{d-1} t_d", d, a);
    Word b(d, 0);
    b[d - 3] = 1;
    b[d - 2] = 1;
    b[d - 1] = static_cast<std::uint32_t>(d - 2);
    family("t_{d-2} t_{d-1} t_d^{d-2}", d, b);
  }
}

void check_weight_length(Probe& p, const VerifyOptions& o) {
  p.eq(permutation_code(Word{3, 1, 5, 4, 2, 6}), Word{2, 0, 2, 1, 0, 0}, [] { return std::string("code of 315426"); });
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      for (const auto& pt : enumerate_lattice_points(DilatedSimplex(d, r))) {
        const auto a = pt.coords();
        auto ctx = [&] { return at(d, r) + " a=" + show(a); };
        const BetaVector beta = beta_partition(a);
        const auto w = grassmannian_permutation(beta, d + r);
        p.eq(permutation_length(w.one_line()), weight_of(a), [&] { return ctx() + " length of w(beta)"; });
        p.eq(oracle::inversion_pairs(w.one_line()), weight_of(a), [&] { return ctx() + " inversion pairs of w(beta)"; });
        auto code = permutation_code(w.one_line());
        Word head(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(d));
        std::sort(head.begin(), head.end(), std::greater<>());
        p.eq(head, to_word(beta.entries()), [&] { return ctx() + " sorted code head"; });
        p.holds(std::all_of(code.begin() + static_cast<std::ptrdiff_t>(d), code.end(), [](auto c) { return c == 0; }),
                [&] { return ctx() + " code tail is zero"; });
        const auto descents = w.descents();
        const bool zero = beta.size() == 0;
        p.holds(zero ? descents.empty() : descents == std::vector<std::size_t>{d},
                [&] { return ctx() + " unique descent at d"; });
      }
    }
  }
}

void check_box_bijection(Probe& p, const VerifyOptions& o) {
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      auto ctx = [&] { return at(d, r); };
      const auto boxes = enumerate_box_partitions(d, r);
      const auto reference = oracle::box_partitions(d, r);
      p.eq(u64(boxes.size()), u64(reference.size()), [&] { return ctx() + " |box partitions| vs brute force"; });
      for (std::size_t i = 0; i < std::min(boxes.size(), reference.size()); ++i) {
        p.eq(to_word(boxes[i].entries()), reference[i], [&] { return ctx() + " box partition #" + std::to_string(i); });
      }
      std::vector<BetaVector> images;
      for (const auto& pt : enumerate_lattice_points(DilatedSimplex(d, r))) images.push_back(beta_partition(pt.coords()));
      std::sort(images.begin(), images.end());
      p.eq(u64(images.size()), u64(boxes.size()), [&] { return ctx() + " |beta images|"; });
      for (std::size_t i = 0; i < std::min(images.size(), boxes.size()); ++i) {
        p.eq(images[i], boxes[i], [&] { return ctx() + " beta image #" + std::to_string(i); });
      }
      for (const auto& b : boxes) {
        const Word a = exponent_from_beta(b);
        p.holds(LatticePoint(a).sum() <= r, [&] { return ctx() + " exponent_from_beta" + show(b) + " lies in the simplex"; });
        p.eq(beta_partition(a), b, [&] { return ctx() + " beta(exponent_from_beta(" + show(b) + "))"; });
      }
    }
  }
}

void check_poincare(Probe& p, const VerifyOptions& o) {
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      auto ctx = [&] { return at(d, r); };
      const Polynomial box = poincare_polynomial(d, r);
      const Polynomial gauss = gaussian_binomial(d, r);
      p.eq(weighted_polynomial(DilatedSimplex(d, r), WeightVector::staircase(d)), box,
           [&] { return ctx() + " weighted polynomial (1,2,...,d) vs box partitions"; });
      p.eq(gauss, box, [&] { return ctx() + " Gaussian quotient vs box partitions"; });
      p.eq(poly(oracle::q_binomial_pascal(d, r)), box, [&] { return ctx() + " q-Pascal vs box partitions"; });
      p.holds(gauss.is_palindromic(), [&] { return ctx() + " palindromic"; });
      p.eq(u64(*gauss.degree()), u64(d * r), [&] { return ctx() + " degree d*r"; });
      if (r >= 1) p.eq(gaussian_binomial(r, d), gauss, [&] { return ctx() + " symmetric in d and r"; });
      p.eq(gauss.coefficient_sum(), oracle::pascal_binomial(r + d, d), [&] { return ctx() + " value at 1"; });
    }
  }
}

void check_specialization(Probe& p, const VerifyOptions& o) {
  std::mt19937 rng(20221);
  std::uniform_int_distribution<std::uint32_t> dist(1, 5);
  for (std::size_t d = 1; d <= o.d_max; ++d) {
    for (std::size_t r = 0; r <= o.r_max; ++r) {
      const DilatedSimplex s(d, r);
      std::vector<WeightVector> weights{WeightVector::ones(d), WeightVector::staircase(d)};
      for (int i = 0; i < 3; ++i) {
        Word w(d);
        for (auto& x : w) x = dist(rng);
        weights.emplace_back(std::move(w));
      }
      for (const auto& w : weights) {
        auto ctx = [&] { return at(d, r) + " w=" + show(w.weights()); };
        const Polynomial wp = weighted_polynomial(s, w);
        p.eq(wp.coefficient_sum(), count_lattice_points(s), [&] { return ctx() + " value at 1"; });
        p.eq(wp, poly(oracle::grade(d, r, w.weights())), [&] { return ctx() + " vs brute-force grading"; });
      }
    }
  }
}

struct CheckSpec {
  std::string name;
  std::string statement;
  std::function<void(Probe&, const VerifyOptions&)> body;
};

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> checks{
      {"lattice-count", "lattice points, fillings and box partitions all number C(r+d, d)", check_lattice_count},
      {"slice-size", "level-k slice under (1,...,1) has C(k+d-1, d-1) points; r+1 classes partition the set",
       check_slice_size},
      {"dilation-series", "sum_r T_r(t) z^r = 1/((1-z)(1-tz)^d)", check_dilation_series},
      {"filling-count", "k-box row fillings number C(k+d-1, d-1); graded count matches", check_filling_count},
      {"tableau-bijection", "T -> v(T) is a grading-preserving bijection onto the lattice points",
       check_tableau_bijection},
      {"character-dimension", "character of Sym^0..Sym^r is the filling sum; its value at 1 is C(r+d, d)",
       check_character},
      {"conjugacy", "alpha and beta partitions are conjugate; odd-part identity; matrix sums", check_conjugacy},
      {"self-conjugate-families", "listed monomial families have self-conjugate alpha = beta", check_self_conjugate},
      {"weight-length", "length of w(beta(a)) equals the weight sum k a_k; code recovers beta", check_weight_length},
      {"box-bijection", "beta maps lattice points onto partitions in the r x d box", check_box_bijection},
      {"poincare-identity", "staircase-weighted polynomial = Gaussian binomial = box-partition sum",
       check_poincare},
      {"specialization", "weighted polynomials evaluate to the lattice-point count at 1", check_specialization},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.inject_fault) {
    const auto& names = check_names();
    if (std::find(names.begin(), names.end(), *options.inject_fault) == names.end()) {
      throw UsageError("unknown check '" + *options.inject_fault + "'");
    }
  }
  std::vector<CheckResult> results;
  for (const auto& spec : registry()) {
    Probe probe(options.inject_fault && *options.inject_fault == spec.name);
    CheckResult result;
    result.name = spec.name;
    result.statement = spec.statement;
    try {
      spec.body(probe, options);
    } catch (const Failure& f) {
      result.passed = false;
      result.counterexample = f.message;
    } catch (const std::exception& e) {
      result.passed = false;
      result.counterexample = std::string("exception: ") + e.what();
    }
    result.cases = probe.cases();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace sgr::cli
