#ifndef GYRO_CORE_ALGEBRA_HPP
#define GYRO_CORE_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gyro {

// A gyrogroup carrier: addition, negation, identity, and tolerant equality.
// `exact` carriers (finite tables) compare exactly and ignore the tolerance;
// numeric carriers use a componentwise absolute-plus-relative test,
// |lhs - rhs| <= tol * (1 + |rhs|), with residual() reporting the normalized
// worst component.
template <class G>
concept Carrier = requires(const G& g, const typename G::Element& a,
                           const typename G::Element& b, double tol) {
  { g.add(a, b) } -> std::convertible_to<typename G::Element>;
  { g.neg(a) } -> std::convertible_to<typename G::Element>;
  { g.zero() } -> std::convertible_to<typename G::Element>;
  { g.approx_eq(a, b, tol) } -> std::convertible_to<bool>;
  { g.residual(a, b) } -> std::convertible_to<double>;
  { g.format(a) } -> std::convertible_to<std::string>;
  { G::exact } -> std::convertible_to<bool>;
};

// Finite carriers additionally expose their elements by index so suites can
// run exhaustively.
template <class G>
concept FiniteCarrier =
    Carrier<G> && requires(const G& g, int i, const typename G::Element& a) {
      { g.carrier_size() } -> std::convertible_to<int>;
      { g.element_at(i) } -> std::convertible_to<typename G::Element>;
      { g.index_of(a) } -> std::convertible_to<int>;
    };

template <class G>
concept HasGyrTable = requires(const G& g, const typename G::Element& a) {
  { g.gyr(a, a, a) } -> std::convertible_to<typename G::Element>;
};

// gyr[a,b](c) = neg(a+b) + (a + (b+c)). This is the one and only definition
// of gyration; carriers with a precomputed table must agree with it (the
// gyration-formula suite check compares the two).
template <Carrier G>
typename G::Element gyr_formula(const G& g, const typename G::Element& a,
                                const typename G::Element& b,
                                const typename G::Element& c) {
  return g.add(g.neg(g.add(a, b)), g.add(a, g.add(b, c)));
}

template <Carrier G>
typename G::Element gyr_apply(const G& g, const typename G::Element& a,
                              const typename G::Element& b,
                              const typename G::Element& c) {
  if constexpr (HasGyrTable<G>)
    return g.gyr(a, b, c);
  else
    return gyr_formula(g, a, b, c);
}

// Coaddition a [+] b = a + gyr[a, -b](b).
template <Carrier G>
typename G::Element coadd(const G& g, const typename G::Element& a,
                          const typename G::Element& b) {
  return g.add(a, gyr_apply(g, a, g.neg(b), b));
}

// Equivalent closed form b + ((-b + a) + b); must agree with coadd in every
// gyrogroup.
template <Carrier G>
typename G::Element coadd_alt(const G& g, const typename G::Element& a,
                              const typename G::Element& b) {
  return g.add(b, g.add(g.add(g.neg(b), a), b));
}

// Cosubtraction a [-] b = a - gyr[a, b](b) = a [+] (-b).
template <Carrier G>
typename G::Element cosub(const G& g, const typename G::Element& a,
                          const typename G::Element& b) {
  return g.add(a, g.neg(gyr_apply(g, a, b, b)));
}

struct IdentityWitness {
  std::string inputs;
  std::string lhs;
  std::string rhs;
  double residual = 0.0;
  std::string note;  // set when evaluating the check itself errored
};

struct IdentityCheck {
  std::string label;
  bool passed = true;
  long long checks = 0;
  long long failures = 0;
  long long errors = 0;          // carrier exceptions while evaluating
  double max_residual = 0.0;     // over successful evaluations
  std::vector<IdentityWitness> witnesses;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.passed; });
  }
  const IdentityCheck* find(const std::string& label) const {
    for (const auto& c : checks)
      if (c.label == label) return &c;
    return nullptr;
  }
};

namespace detail {

enum CheckId : int {
  kG1 = 0,
  kG2,
  kRightGyroassoc,
  kLeftGyroassoc,
  kRightLoop,
  kLeftLoop,
  kLeftCancellation,
  kCoaddRightCancel,
  kCosubRightCancel,
  kGyrationFormula,
  kGyrosumInversion,
  kGyrationNegation,
  kInversiveSymmetry,
  kCogyroInverse,
  kEvenSymmetry,
  kTrivialGyration,
  kGyrationAutomorphism,
  kG4,
  kCheckCount
};

inline constexpr std::array<const char*, kCheckCount> kCheckLabels = {
    "G1",
    "G2",
    "right-gyroassociativity",
    "left-gyroassociativity",
    "right-loop",
    "left-loop",
    "left-cancellation",
    "coaddition-right-cancellation",
    "cosubtraction-right-cancellation",
    "gyration-formula",
    "gyrosum-inversion",
    "gyration-preserves-negation",
    "inversive-symmetry",
    "cogyroautomorphic-inverse",
    "even-symmetry",
    "trivial-gyration",
    "gyration-automorphism",
    "G4",
};

constexpr int kMaxWitnessesPerCheck = 3;

}  // namespace detail

// Evaluates the derived-identity checklist one tuple at a time, accumulating
// pass/fail counts, the worst normalized residual, and witnesses for
// failures. Carrier exceptions (a numeric variant can leave the ball) are
// recorded as failures of the check being evaluated, not fatal errors.
template <Carrier G>
class IdentitySuite {
 public:
  using Element = typename G::Element;

  IdentitySuite(const G& g, double tol) : g_(g), tol_(tol) {
    if (!G::exact && !(tol > 0.0))
      fail(errc::tolerance_not_positive,
           "tolerance must be positive for a numeric carrier");
    report_.checks.resize(detail::kCheckCount);
    for (int i = 0; i < detail::kCheckCount; ++i)
      report_.checks[i].label = detail::kCheckLabels[i];
  }

  // G1 and G2 look at one element.
  void check_element(const Element& a) {
    auto in = [&] { return "a = " + g_.format(a); };
    eval(detail::kG1, in, [&] { return pair(g_.add(g_.zero(), a), a); });
    eval(detail::kG1, in, [&] { return pair(g_.add(a, g_.zero()), a); });
    eval(detail::kG2, in,
         [&] { return pair(g_.add(g_.neg(a), a), g_.zero()); });
    eval(detail::kG2, in,
         [&] { return pair(g_.add(a, g_.neg(a)), g_.zero()); });
  }

  // Everything pointwise in (a, b, c).
  void check_triple(const Element& a, const Element& b, const Element& c) {
    auto in = [&] {
      return "a = " + g_.format(a) + ", b = " + g_.format(b) +
             ", c = " + g_.format(c);
    };

    // (a+b)+c = a+(b+gyr[b,a]c)
    eval(detail::kRightGyroassoc, in, [&] {
      return pair(g_.add(g_.add(a, b), c),
                  g_.add(a, g_.add(b, gyr_apply(g_, b, a, c))));
    });
    // a+(b+c) = (a+b)+gyr[a,b]c
    eval(detail::kLeftGyroassoc, in, [&] {
      return pair(g_.add(a, g_.add(b, c)),
                  g_.add(g_.add(a, b), gyr_apply(g_, a, b, c)));
    });
    // gyr[a,b] = gyr[a, b+a], pointwise at c
    eval(detail::kRightLoop, in, [&] {
      return pair(gyr_apply(g_, a, b, c), gyr_apply(g_, a, g_.add(b, a), c));
    });
    // gyr[a,b] = gyr[a+b, b], pointwise at c; doubles as axiom G4
    {
      auto e = [&] {
        return pair(gyr_apply(g_, a, b, c), gyr_apply(g_, g_.add(a, b), b, c));
      };
      eval(detail::kLeftLoop, in, e);
      eval(detail::kG4, in, e);
    }
    // (-a)+(a+b) = b
    eval(detail::kLeftCancellation, in,
         [&] { return pair(g_.add(g_.neg(a), g_.add(a, b)), b); });
    // (a-b) [+] b = a
    eval(detail::kCoaddRightCancel, in,
         [&] { return pair(coadd(g_, g_.add(a, g_.neg(b)), b), a); });
    // (a [-] b)+b = a
    eval(detail::kCosubRightCancel, in,
         [&] { return pair(g_.add(cosub(g_, a, b), b), a); });
    // table/cached gyration agrees with its defining formula
    eval(detail::kGyrationFormula, in, [&] {
      return pair(gyr_apply(g_, a, b, c), gyr_formula(g_, a, b, c));
    });
    // -(a+b) = gyr[a,b](-b-a)
    eval(detail::kGyrosumInversion, in, [&] {
      return pair(g_.neg(g_.add(a, b)),
                  gyr_apply(g_, a, b, g_.add(g_.neg(b), g_.neg(a))));
    });
    // gyr[a,b](-c) = -gyr[a,b](c)
    eval(detail::kGyrationNegation, in, [&] {
      return pair(gyr_apply(g_, a, b, g_.neg(c)),
                  g_.neg(gyr_apply(g_, a, b, c)));
    });
    // gyr[b,a] inverts gyr[a,b]
    eval(detail::kInversiveSymmetry, in, [&] {
      return pair(gyr_apply(g_, b, a, gyr_apply(g_, a, b, c)), c);
    });
    // -(a [+] b) = (-b) [+] (-a)
    eval(detail::kCogyroInverse, in, [&] {
      return pair(g_.neg(coadd(g_, a, b)), coadd(g_, g_.neg(b), g_.neg(a)));
    });
    // gyr[-a,-b] = gyr[a,b], pointwise at c
    eval(detail::kEvenSymmetry, in, [&] {
      return pair(gyr_apply(g_, g_.neg(a), g_.neg(b), c),
                  gyr_apply(g_, a, b, c));
    });
    // gyr[a,0] = gyr[0,b] = id, pointwise at c
    eval(detail::kTrivialGyration, in,
         [&] { return pair(gyr_apply(g_, a, g_.zero(), c), c); });
    eval(detail::kTrivialGyration, in,
         [&] { return pair(gyr_apply(g_, g_.zero(), b, c), c); });
  }

  // One automorphism instance: gyr[a,b](x+y) = gyr[a,b]x + gyr[a,b]y.
  void check_automorphism(const Element& a, const Element& b, const Element& x,
                          const Element& y) {
    auto in = [&] {
      return "a = " + g_.format(a) + ", b = " + g_.format(b) +
             ", x = " + g_.format(x) + ", y = " + g_.format(y);
    };
    eval(detail::kGyrationAutomorphism, in, [&] {
      return pair(gyr_apply(g_, a, b, g_.add(x, y)),
                  g_.add(gyr_apply(g_, a, b, x), gyr_apply(g_, a, b, y)));
    });
  }

  // Explicit failure hook for checks computed outside the tuple evaluators
  // (finite bijectivity).
  void record_failure(int check_id, std::string inputs, std::string note) {
    auto& c = report_.checks[check_id];
    ++c.checks;
    ++c.failures;
    c.passed = false;
    if ((int)c.witnesses.size() < detail::kMaxWitnessesPerCheck)
      c.witnesses.push_back({std::move(inputs), "", "", 1.0, std::move(note)});
  }

  void count_pass(int check_id) {
    auto& c = report_.checks[check_id];
    ++c.checks;
  }

  IdentityReport take() && { return std::move(report_); }

 private:
  static std::pair<Element, Element> pair(Element l, Element r) {
    return {std::move(l), std::move(r)};
  }

  template <class Inputs, class Eval>
  void eval(int check_id, Inputs&& inputs, Eval&& evaluate) {
    auto& c = report_.checks[check_id];
    ++c.checks;
    if constexpr (G::exact) {
      settle(c, evaluate(), inputs);
    } else {
      try {
        settle(c, evaluate(), inputs);
      } catch (const Error& e) {
        ++c.failures;
        ++c.errors;
        c.passed = false;
        if ((int)c.witnesses.size() < detail::kMaxWitnessesPerCheck)
          c.witnesses.push_back({inputs(), "", "", 0.0,
                                 std::string("evaluation error: ") + e.what()});
      }
    }
  }

  template <class Inputs>
  void settle(IdentityCheck& c, std::pair<Element, Element> lr,
              Inputs&& inputs) {
    bool ok = g_.approx_eq(lr.first, lr.second, tol_);
    double res = g_.residual(lr.first, lr.second);
    c.max_residual = std::max(c.max_residual, res);
    if (!ok) {
      ++c.failures;
      c.passed = false;
      if ((int)c.witnesses.size() < detail::kMaxWitnessesPerCheck)
        c.witnesses.push_back({inputs(), g_.format(lr.first),
                               g_.format(lr.second), res, ""});
    }
  }

  const G& g_;
  double tol_;
  IdentityReport report_;
};

// Sampled suite for numeric carriers: `samples` tuples (a, b, c, d) drawn
// from the given element source.
template <Carrier G, class Sampler>
IdentityReport identity_suite(const G& g, Sampler&& sample, long long samples,
                              double tol) {
  IdentitySuite<G> suite(g, tol);
  for (long long k = 0; k < samples; ++k) {
    auto a = sample();
    auto b = sample();
    auto c = sample();
    auto d = sample();
    suite.check_element(a);
    suite.check_triple(a, b, c);
    suite.check_automorphism(a, b, c, d);
  }
  return std::move(suite).take();
}

// Exhaustive suite for finite carriers: all elements for G1/G2, all triples
// for the pointwise identities, all pairs-of-pairs for the automorphism law,
// plus a bijectivity sweep of every gyration.
template <FiniteCarrier G>
IdentityReport identity_suite_exhaustive(const G& g, double tol = 0.0) {
  const int n = g.carrier_size();
  if (n > 64)
    fail(errc::resource_limit,
         "exhaustive identity suite is quartic; carrier size " +
             std::to_string(n) + " exceeds 64");
  IdentitySuite<G> suite(g, tol);

  for (int i = 0; i < n; ++i) suite.check_element(g.element_at(i));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        suite.check_triple(g.element_at(i), g.element_at(j), g.element_at(k));

  std::vector<char> hit(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto a = g.element_at(i);
      auto b = g.element_at(j);
      // gyr[a,b] must be a bijection of the carrier
      std::fill(hit.begin(), hit.end(), 0);
      bool injective = true;
      for (int k = 0; k < n && injective; ++k) {
        int image = g.index_of(gyr_apply(g, a, b, g.element_at(k)));
        if (hit[image]) {
          suite.record_failure(
              detail::kGyrationAutomorphism,
              "a = " + g.format(a) + ", b = " + g.format(b),
              "gyration is not injective: two elements map to " +
                  g.format(g.element_at(image)));
          injective = false;
        }
        hit[image] = 1;
      }
      if (injective) suite.count_pass(detail::kGyrationAutomorphism);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          suite.check_automorphism(a, b, g.element_at(x), g.element_at(y));
    }

  return std::move(suite).take();
}

}  // namespace gyro

#endif
