#ifndef PST_THEOREMS_HPP
#define PST_THEOREMS_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "permutability.hpp"
#include "structure.hpp"

namespace pst
{

enum class Verdict
{
  consistent,
  vacuous,
  inapplicable,
  counterexample,
  error
};

inline std::string_view to_string(Verdict v)
{
  switch (v) {
  case Verdict::consistent:
    return "consistent";
  case Verdict::vacuous:
    return "vacuous";
  case Verdict::inapplicable:
    return "inapplicable";
  case Verdict::counterexample:
    return "COUNTEREXAMPLE";
  case Verdict::error:
    return "ERROR";
  }
  return "?";
}

/// A labelled subgroup, named by a generating set in cycle notation.
struct Witness
{
  std::string label;
  SubId id = 0;
  std::size_t order = 0;
  std::vector<std::string> generators;
};

struct VerificationReport
{
  std::string group;
  std::size_t order = 0;
  std::string statement;
  std::vector<std::pair<std::string, bool>> clauses;
  Verdict verdict = Verdict::consistent;
  /// Hypothesis genuinely true somewhere (all clauses true for equivalences).
  bool confirmed = false;
  /// Quantified instances examined.
  std::size_t instances = 0;
  std::vector<Witness> witnesses;
  std::string note;
  double elapsed_ms = 0;
};

inline Witness make_witness(Analysis const &an, std::string label, SubId id)
{
  Witness w;
  w.label = std::move(label);
  w.id = id;
  w.order = an.order(id);
  auto const &G = an.group();
  for (auto g : an.lattice().generators(id))
    w.generators.push_back(G.has_permutations() ? G.permutation(g).to_cycle_string()
                                                : "e" + std::to_string(g));
  if (w.generators.empty())
    w.generators.push_back("()");
  return w;
}

namespace detail
{

using K = PermutabilityKind;

inline bool qp(Analysis &an, SubId H) { return is(an, H, K::quasipermutable); }
inline bool sqp(Analysis &an, SubId H) { return is(an, H, K::s_quasipermutable); }

inline std::vector<SubId> hall_subgroups(Lattice const &L, SubId U)
{
  std::vector<SubId> out;
  for (auto x : L.subgroups_of(U))
    if (is_hall(L, x, U))
      out.push_back(x);
  return out;
}

inline PrimeSet primes_of(Analysis const &an, SubId H)
{ return PrimeSet::of(an.order(H)); }

inline PrimeSet all_primes(Analysis const &an)
{ return PrimeSet::of(an.group().order()); }

/// Neither trivial nor the whole group.
inline bool proper(Analysis const &an, SubId h)
{ return h != an.trivial() && h != an.whole(); }

/**
 * Collects instances of an implication "hypothesis => conclusion" and turns
 * them into a verdict.  The first failing instance and the first confirming
 * instance are kept as witnesses.
 */
class Tally
{
public:
  explicit Tally(VerificationReport &r) : r_(r) {}

  using Describe = std::function<void(VerificationReport &, std::string_view)>;

  /**
   * Degenerate instances (trivial or whole subgroup, empty prime set) are
   * still checked but do not count as confirmations.
   */
  void add(bool hypothesis, bool conclusion, Describe const &describe = {},
           bool degenerate = false)
  {
    ++r_.instances;
    if (!hypothesis)
      return;
    ++(degenerate ? degenerate_ : confirmed_);
    if (!conclusion && !failed_) {
      failed_ = true;
      if (describe)
        describe(r_, "counterexample");
    } else if (!degenerate && confirmed_ == 1 && describe && conclusion) {
      describe(r_, "confirmed");
    }
  }

  /// Records a hypothesis failure that is worth showing (first one only).
  void note_refutation(Describe const &describe)
  {
    if (!refutation_noted_ && describe) {
      refutation_noted_ = true;
      describe(r_, "hypothesis refuted");
    }
  }

  std::size_t confirmed() const { return confirmed_; }

  void finish()
  {
    bool any = confirmed_ + degenerate_ > 0;
    r_.clauses.emplace_back("hypothesis", any);
    r_.clauses.emplace_back("conclusion", !failed_);
    r_.confirmed = confirmed_ > 0;
    if (failed_)
      r_.verdict = Verdict::counterexample;
    else if (any)
      r_.verdict = Verdict::consistent;
    else if (r_.instances == 0)
      r_.verdict = Verdict::inapplicable;
    else
      r_.verdict = Verdict::vacuous;
    auto counts = std::to_string(confirmed_) + " of " + std::to_string(r_.instances) +
                  " instances satisfy the hypothesis (" + std::to_string(degenerate_) +
                  " more degenerate)";
    r_.note = r_.note.empty() ? counts : r_.note + "; " + counts;
  }

private:
  VerificationReport &r_;
  std::size_t confirmed_ = 0;
  std::size_t degenerate_ = 0;
  bool failed_ = false;
  bool refutation_noted_ = false;
};

/// Scores an equivalence: consistent iff all clauses agree.
inline void finish_equivalence(VerificationReport &r)
{
  bool all_true = true, all_false = true;
  for (auto const &[name, value] : r.clauses) {
    all_true = all_true && value;
    all_false = all_false && !value;
  }
  r.instances = 1;
  r.confirmed = all_true;
  r.verdict = all_true || all_false ? Verdict::consistent : Verdict::counterexample;
}

inline VerificationReport start(Analysis const &an, std::string statement)
{
  VerificationReport r;
  r.group = an.group().name();
  r.order = an.group().order();
  r.statement = std::move(statement);
  return r;
}

inline void mark_inapplicable(VerificationReport &r, std::string why)
{
  r.verdict = Verdict::inapplicable;
  r.note = std::move(why);
}

/// S with DS = U and no proper subgroup of S doing the same.
inline std::vector<SubId> minimal_supplements(Analysis &an, SubId D, SubId U)
{
  auto const &L = an.lattice();
  std::vector<SubId> out;
  for (auto s : L.subgroups_of(U)) {
    if (L.product_size(D, s) != an.order(U))
      continue;
    bool minimal = true;
    for (auto m : L.maximal_subgroups_of(s))
      if (L.product_size(D, m) == an.order(U)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(s);
  }
  return out;
}

/// First subgroup in `xs` failing `pred`, if any.
template <class Pred>
std::optional<SubId> first_failing(std::vector<SubId> const &xs, Pred &&pred)
{
  for (auto x : xs)
    if (!pred(x))
      return x;
  return std::nullopt;
}

/// Maximal subgroups of every Sylow p-subgroup of G, for p in `primes`.
inline std::optional<SubId> first_non_sqp_sylow_maximal(Analysis &an,
                                                        PrimeSet const &primes)
{
  auto const &L = an.lattice();
  for (auto p : primes)
    for (auto P : sylow_subgroups(an, an.whole(), p))
      for (auto m : L.maximal_subgroups_of(P))
        if (!sqp(an, m))
          return m;
  return std::nullopt;
}

inline bool pi_number_index(Analysis const &an, SubId big, SubId small,
                            PrimeSet const &pi)
{ return pi.is_pi_number(an.order(big) / an.order(small)); }

/// |H_p| > 1 and H_p not inside N for every Sylow subgroup H_p of H.
inline bool sylows_escape(Analysis &an, SubId H, SubId N)
{
  auto const &L = an.lattice();
  for (auto p : primes_of(an, H))
    for (auto hp : sylow_subgroups(an, H, p))
      if (L.contains(N, hp))
        return false;
  return true;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Main equivalences
// ---------------------------------------------------------------------------

inline VerificationReport verify_theorem_A(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "ThmA");
  auto G = an.whole();
  auto D = residual(an, Formation::nilpotent());
  auto pi = primes_of(an, D);
  r.witnesses.push_back(make_witness(an, "D (nilpotent residual)", D));

  auto halls = hall_subgroups(L, G);
  auto bad_hall = first_failing(halls, [&](SubId h) { return qp(an, h); });
  bool c1 = is_hall(L, D, G) && !bad_hall;

  bool pst = is_soluble(an, G) && transitivity_class(an, Relation::s_permutable).holds;
  if (an.mutation)
    pst = !pst;
  bool c2 = pst;

  std::vector<SubId> everything(L.subgroups_of(G).begin(), L.subgroups_of(G).end());
  auto bad_sub = first_failing(everything, [&](SubId h) { return qp(an, h); });
  bool c3 = !bad_sub;

  std::vector<SubId> pi_subs;
  for (auto x : everything)
    if (pi.is_pi_number(an.order(x)))
      pi_subs.push_back(x);
  auto bad_pi = first_failing(pi_subs, [&](SubId h) { return qp(an, h); });
  std::optional<SubId> good_supplement;
  for (auto s : minimal_supplements(an, D, G))
    if (qp(an, s)) {
      good_supplement = s;
      break;
    }
  bool c4 = !bad_pi && good_supplement.has_value();

  r.clauses = {{"i", c1}, {"ii", c2}, {"iii", c3}, {"iv", c4}};
  if (bad_hall)
    r.witnesses.push_back(make_witness(an, "Hall subgroup not quasipermutable", *bad_hall));
  if (bad_sub)
    r.witnesses.push_back(make_witness(an, "subgroup not quasipermutable", *bad_sub));
  if (good_supplement)
    r.witnesses.push_back(
      make_witness(an, "quasipermutable minimal supplement of D", *good_supplement));
  finish_equivalence(r);
  return r;
}

inline VerificationReport verify_theorem_B(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto const &Gr = an.group();
  auto r = start(an, "ThmB");
  auto G = an.whole();
  auto halls = hall_subgroups(L, G);

  // (I)
  bool soluble = is_soluble(an, G);
  bool c1 = soluble;
  if (soluble) {
    for (auto S : gaschutz_subgroups(an)) {
      auto piS = primes_of(an, S);
      for (auto h : halls)
        if (primes_of(an, h).subset_of(piS) && !qp(an, h)) {
          c1 = false;
          r.witnesses.push_back(make_witness(an, "Gaschutz subgroup S", S));
          r.witnesses.push_back(
            make_witness(an, "Hall subgroup with primes in S, not quasipermutable", h));
          break;
        }
      if (!c1)
        break;
    }
  }

  // (II)
  bool c2 = is_supersoluble(an, G);
  auto D = residual(an, Formation::nilpotent());
  auto carters = carter_subgroups(an);
  if (c2) {
    // (a)
    c2 = is_abelian(an, D) && !complements(L, D, G).empty() && !carters.empty();
    for (auto C : carters)
      c2 = c2 && L.product_size(D, C) == Gr.order();
  }
  if (c2) {
    // (b)
    for (auto C : carters) {
      auto dc = L.meet(D, C);
      if (!L.is_normal(dc)) {
        c2 = false;
        break;
      }
      auto index = an.order(D) / an.order(dc);
      for (auto p : prime_divisors(Gr.order()))
        if (std::gcd<std::size_t>(p - 1, Gr.order()) == 1 && index % p == 0)
          c2 = false;
    }
  }
  if (c2) {
    // (c)
    for (auto const &pi : all_primes(an).subsets()) {
      if (pi.empty())
        continue;
      auto pi_prime = pi.complement_in(primes_of(an, D));
      auto dh = hall(an, D, pi_prime).subgroups;
      for (auto C : carters)
        L[C].members().for_each([&](Elem x) {
          if (!c2 || !pi.is_pi_number(Gr.element_order(x)))
            return;
          for (auto h : dh) {
            bool normalizes = true;
            L[h].members().for_each([&](Elem d) {
              if (!L[h].contains(Gr.conj(d, x)))
                normalizes = false;
            });
            if (!normalizes || !induces_power_automorphism(Gr, x, L[h])) {
              c2 = false;
              return;
            }
          }
        });
    }
  }

  // (III)
  auto bad_hall = first_failing(halls, [&](SubId h) { return qp(an, h); });
  bool c3 = !bad_hall;
  if (bad_hall)
    r.witnesses.push_back(make_witness(an, "Hall subgroup not quasipermutable", *bad_hall));
  r.witnesses.push_back(make_witness(an, "D (nilpotent residual)", D));
  if (!carters.empty())
    r.witnesses.push_back(make_witness(an, "Carter subgroup", carters.front()));

  r.clauses = {{"I", c1}, {"II", c2}, {"III", c3}};
  finish_equivalence(r);
  return r;
}

/// F must be nilpotent or supersoluble.
inline VerificationReport verify_theorem_C(Analysis &an, Formation const &F)
{
  using namespace detail;
  if (F.kind() != Formation::Kind::nilpotent && F.kind() != Formation::Kind::supersoluble)
    throw usage_error("theorem C is instantiated for nilpotent and supersoluble only");
  auto const &L = an.lattice();
  auto r = start(an, F.kind() == Formation::Kind::nilpotent ? "ThmC(N)" : "ThmC(U)");
  auto G = an.whole();
  if (!is_soluble(an, G)) {
    mark_inapplicable(r, "group is not soluble");
    return r;
  }
  auto projectors = f_projectors(an, F);
  if (projectors.empty())
    throw std::logic_error("soluble group without a projector");
  auto C = projectors.front();
  auto R = residual(an, F);
  auto pi = primes_of(an, C).intersection(primes_of(an, R));
  auto bad = first_non_sqp_sylow_maximal(an, pi);
  bool hyp = !bad;
  bool concl = is_hall(L, R, G);
  r.witnesses.push_back(make_witness(an, "projector C", C));
  r.witnesses.push_back(make_witness(an, "residual", R));
  if (bad)
    r.witnesses.push_back(
      make_witness(an, "maximal subgroup of a Sylow subgroup, not S-quasipermutable", *bad));
  r.note = "pi = " + pi.to_string();
  // only G in F makes the conclusion trivial; an empty pi still leaves "G^F is Hall" to check
  Tally t(r);
  t.add(hyp, concl, {}, R == an.trivial());
  t.finish();
  r.clauses.insert(r.clauses.begin(), {"pi_nonempty", !pi.empty()});
  return r;
}

/// F must be supersoluble.
inline VerificationReport verify_theorem_D(Analysis &an, Formation const &F)
{
  using namespace detail;
  if (F.kind() != Formation::Kind::supersoluble)
    throw usage_error("theorem D is instantiated for the supersoluble formation only");
  auto r = start(an, "ThmD(U)");
  auto R = residual(an, F);
  bool hyp = R != an.trivial();
  auto pi = hyp ? primes_of(an, f_star(an, R)) : PrimeSet{};
  auto bad = first_non_sqp_sylow_maximal(an, pi);
  r.witnesses.push_back(make_witness(an, "residual", R));
  if (bad)
    r.witnesses.push_back(
      make_witness(an, "maximal subgroup of a Sylow subgroup, not S-quasipermutable", *bad));
  r.note = "pi = " + pi.to_string();
  Tally t(r);
  t.add(hyp, bad.has_value());
  t.finish();
  return r;
}

// ---------------------------------------------------------------------------
// Chief factors and S-quasipermutable Sylow maximals
// ---------------------------------------------------------------------------

inline VerificationReport verify_proposition_1(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Prop1");
  Tally t(r);
  auto G = an.whole();
  auto witness_pair = [&](SubId E, SubId P) {
    return [&an, E, P](VerificationReport &rep, std::string_view what) {
      rep.witnesses.push_back(make_witness(an, std::string(what) + ": E", E));
      rep.witnesses.push_back(make_witness(an, std::string(what) + ": Sylow P of E", P));
    };
  };
  auto cyclic_between = [&](SubId lower, SubId upper) {
    auto cs = chief_series(L, G, {lower, upper});
    for (auto const &f : cs.factors)
      if (L.contains(upper, f.upper) && L.contains(f.lower, lower) && !f.cyclic)
        return false;
    return true;
  };

  for (auto E : normal_subgroups(L)) {
    if (E == an.trivial())
      continue;
    bool all_sylow_maximals_sqp = true;
    for (auto p : primes_of(an, E)) {
      auto const &sylows = sylow_subgroups(an, E, p);
      for (auto P : sylows)
        for (auto m : L.maximal_subgroups_of(P))
          all_sylow_maximals_sqp = all_sylow_maximals_sqp && sqp(an, m);
      auto P = sylows.front();
      if (an.order(P) <= p)
        continue;

      // (i): the S-quasipermutable maximals meet in the Frattini subgroup
      // exactly when some M_phi system consists of them.
      auto phi = L[frattini(L, P)].members();
      ElementSet meet = L[P].members();
      for (auto m : L.maximal_subgroups_of(P))
        if (sqp(an, m))
          meet &= L[m].members();
      bool hyp1 = meet == phi;
      t.add(hyp1, is_p_supersoluble(an, E, p), witness_pair(E, P));

      // (ii)
      bool hyp2 = true;
      for (auto m : L.maximal_subgroups_of(P))
        if (!sqp(an, m)) {
          hyp2 = false;
          if (E == G)
            t.note_refutation([&an, m](VerificationReport &rep, std::string_view) {
              rep.witnesses.push_back(make_witness(
                an, "maximal subgroup of a Sylow subgroup, not S-quasipermutable", m));
            });
          break;
        }
      auto core = o_pi(an, E, PrimeSet{p}.complement_in(primes_of(an, E)));
      t.add(hyp2, cyclic_between(core, E), witness_pair(E, P));
    }
    // (iii)
    t.add(all_sylow_maximals_sqp, cyclic_between(an.trivial(), E),
          [&an, E](VerificationReport &rep, std::string_view what) {
            rep.witnesses.push_back(make_witness(an, std::string(what) + ": E", E));
          });
  }
  t.finish();
  return r;
}

// ---------------------------------------------------------------------------
// Basic properties of (S-)quasipermutable subgroups
// ---------------------------------------------------------------------------

namespace detail
{

inline VerificationReport prop_2_1_part(Analysis &an, int part)
{
  auto const &L = an.lattice();
  auto const &Gr = an.group();
  auto r = start(an, "Prop2_1(" + std::to_string(part) + ")");
  Tally t(r);
  auto G = an.whole();
  auto normals = normal_subgroups(L);
  auto show = [&an](SubId h) {
    return [&an, h](VerificationReport &rep, std::string_view what) {
      rep.witnesses.push_back(make_witness(an, std::string(what) + ": H", h));
    };
  };
  auto show2 = [&an](SubId h, SubId n) {
    return [&an, h, n](VerificationReport &rep, std::string_view what) {
      rep.witnesses.push_back(make_witness(an, std::string(what) + ": H", h));
      rep.witnesses.push_back(make_witness(an, std::string(what) + ": N", n));
    };
  };

  for (SubId h = 0; h < L.size(); ++h) {
    bool is_qp = qp(an, h), is_sqp = sqp(an, h);
    auto pi = primes_of(an, h);
    switch (part) {
    case 1:
    case 5:
      for (auto n : normals) {
        if (n == an.trivial() || n == G)
          continue;
        auto &q = an.quotient(n);
        auto img = q.image(L, h);
        auto &qa = *q.analysis;
        if (part == 1) {
          bool shape = is_hall(L, h, G) || sylows_escape(an, h, n);
          t.add(is_qp && shape, qp(qa, img), show2(h, n), !proper(an, h));
          t.add(is_sqp && shape, sqp(qa, img), show2(h, n), !proper(an, h));
        } else {
          t.add(is_qp && is(an, h, K::propermutable), is(qa, img, K::propermutable),
                show2(h, n), !proper(an, h));
          t.add(is_sqp && is(an, h, K::s_propermutable),
                is(qa, img, K::s_propermutable), show2(h, n), !proper(an, h));
        }
      }
      break;
    case 2: {
      if (!is_sqp || !is_pi_soluble(an, G, pi))
        break;
      auto pi_prime = pi.complement_in(all_primes(an));
      bool found = false;
      for (auto e : hall(an, pi_prime).subgroups)
        if (an.permutes(h, e)) {
          found = true;
          break;
        }
      t.add(true, found, show(h), !proper(an, h));
      break;
    }
    case 3:
    case 6: {
      bool hyp = part == 3 ? is_sqp : is_sqp && is(an, h, K::s_propermutable);
      if (!hyp)
        break;
      bool ok = true;
      for (auto p : prime_divisors(Gr.order())) {
        if (part == 3 && an.order(h) % p == 0)
          continue;
        bool found = false;
        for (auto P : sylow_subgroups(an, G, p))
          if (an.permutes(h, P)) {
            found = true;
            break;
          }
        ok = ok && found;
      }
      t.add(true, ok, show(h), !proper(an, h));
      break;
    }
    case 4:
      if (!is_sqp)
        break;
      for (auto n : normals) {
        auto pi_n = primes_of(an, n).united(pi);
        auto hn = L.meet(h, n);
        t.add(true, pi_number_index(an, G, L.normalizer(hn), pi_n), show2(h, n),
              !proper(an, h) || n == an.trivial());
      }
      break;
    case 7:
      if (!is_hall(L, h, G) || !is_pi_soluble(an, G, pi))
        break;
      t.add(is_qp, is(an, h, K::propermutable), show(h), !proper(an, h));
      t.add(is_sqp, is(an, h, K::s_propermutable), show(h), !proper(an, h));
      break;
    default:
      throw usage_error("unknown part " + std::to_string(part));
    }
  }
  t.finish();
  return r;
}

} // namespace detail

inline VerificationReport verify_proposition_2_1(Analysis &an, int part)
{ return detail::prop_2_1_part(an, part); }

inline VerificationReport verify_proposition_2_2(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Prop2_2");
  Tally t(r);
  for (auto h : hall_subgroups(L, an.whole())) {
    if (!sqp(an, h))
      continue;
    auto pi = PrimeSet::of(an.group().order() / an.order(h));
    auto halls = hall(an, pi);
    t.add(true, !halls.subgroups.empty() && halls.all_conjugate,
          [&an, h](VerificationReport &rep, std::string_view what) {
            rep.witnesses.push_back(make_witness(an, std::string(what) + ": H", h));
          },
          !proper(an, h));
  }
  t.finish();
  return r;
}

inline VerificationReport verify_proposition_2_3(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Prop2_3");
  Tally t(r);
  for (auto E : normal_subgroups(L))
    for (auto h : hall_subgroups(L, E)) {
      auto pi = primes_of(an, h);
      t.add(is_nilpotent(an, h) && sqp(an, h), is_pi_soluble(an, E, pi),
            [&an, E, h](VerificationReport &rep, std::string_view what) {
              rep.witnesses.push_back(make_witness(an, std::string(what) + ": E", E));
              rep.witnesses.push_back(make_witness(an, std::string(what) + ": H", h));
            },
            h == an.trivial() || h == E);
    }
  t.finish();
  return r;
}

// ---------------------------------------------------------------------------
// Hall quasipermutable subgroups
// ---------------------------------------------------------------------------

/// part is "I", "II" or "III".
inline VerificationReport verify_theorem_3_1(Analysis &an, std::string_view part)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto const &Gr = an.group();
  auto r = start(an, "Thm3_1(" + std::string(part) + ")");
  Tally t(r);
  auto G = an.whole();
  auto everything = all_primes(an);
  for (auto h : hall_subgroups(L, G)) {
    if (!qp(an, h))
      continue;
    auto pi = primes_of(an, h);
    auto pi_prime = pi.complement_in(everything);
    auto show = [&an, h](VerificationReport &rep, std::string_view what) {
      rep.witnesses.push_back(make_witness(an, std::string(what) + ": H", h));
    };
    if (part == "I") {
      auto index = Gr.order() / an.order(L.normalizer(h));
      bool ordered = true;
      for (auto p : pi)
        for (auto q : prime_divisors(index))
          ordered = ordered && p > q;
      t.add(ordered, L.is_normal(h), show, !proper(an, h));
    } else if (part == "II") {
      t.add(is_supersoluble(an, h), is_pi_soluble(an, G, pi), show, !proper(an, h));
    } else if (part == "III") {
      if (!is_pi_separable(an, G, pi)) {
        t.add(false, true);
        continue;
      }
      auto opi = o_pi(an, pi);
      bool i1 = L.contains(opi, derived_subgroup(an, h));
      bool i2 = !is_nilpotent(an, L.normalizer(h)) ||
                L.contains(opi, L.meet(derived_subgroup(an, G), h));
      bool ii = pi_length(an, G, pi) <= 2 && pi_length(an, G, pi_prime) <= 2;
      bool iii = true;
      for (auto E : hall(an, pi_prime).subgroups)
        for (auto p : pi_prime)
          if (is_p_supersoluble(an, E, p) && !is_p_supersoluble(an, G, p))
            iii = false;
      t.add(true, i1 && i2 && ii && iii, show, !proper(an, h));
    } else {
      throw usage_error("unknown part " + std::string(part));
    }
  }
  t.finish();
  return r;
}

inline VerificationReport verify_lemma_3_4(Analysis &an)
{
  using namespace detail;
  auto r = start(an, "Lem3_4");
  Tally t(r);
  for (auto const &pi : all_primes(an).subsets()) {
    if (pi.empty() || !is_pi_separable(an, an.whole(), pi))
      continue;
    auto halls = hall(an, pi).subgroups;
    bool abelian = !halls.empty();
    for (auto h : halls)
      abelian = abelian && is_abelian(an, h);
    t.add(abelian, pi_length(an, an.whole(), pi) <= 1,
          [&an, h = halls.empty() ? an.trivial() : halls.front()](
            VerificationReport &rep, std::string_view what) {
            rep.witnesses.push_back(make_witness(an, std::string(what) + ": Hall", h));
          },
          halls.empty() || !proper(an, halls.front()));
  }
  t.finish();
  return r;
}

inline VerificationReport verify_lemma_3_5(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Lem3_5");
  Tally t(r);
  auto G = an.whole();
  for (auto h : hall_subgroups(L, G)) {
    auto pi = primes_of(an, h);
    if (!is_pi_separable(an, G, pi))
      continue;
    auto n = L.normalizer(h);
    // H <= Z(N_G(H)) iff N_G(H) centralizes H
    bool central = L[h].members().subset_of(
      centralizer(an.group(), L[n].members()).members());
    auto pi_prime = pi.complement_in(all_primes(an));
    t.add(central, is_pi_closed(an, G, pi_prime),
          [&an, h](VerificationReport &rep, std::string_view what) {
            rep.witnesses.push_back(make_witness(an, std::string(what) + ": H", h));
          },
          !proper(an, h));
  }
  t.finish();
  return r;
}

// ---------------------------------------------------------------------------
// Soluble PST and SQT groups
// ---------------------------------------------------------------------------

inline VerificationReport verify_theorem_5_1(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Thm5_1");
  auto G = an.whole();
  if (!is_soluble(an, G)) {
    mark_inapplicable(r, "group is not soluble");
    return r;
  }
  auto pi = primes_of(an, residual(an, Formation::nilpotent()));
  bool pst = transitivity_class(an, Relation::s_permutable).holds;
  bool rhs = true;
  for (auto x : L.subgroups_of(G))
    if (pi.is_pi_number(an.order(x)) && is_subnormal(L, x, G) &&
        !is(an, x, K::propermutable)) {
      rhs = false;
      r.witnesses.push_back(make_witness(an, "subnormal pi-subgroup, not propermutable", x));
      break;
    }
  auto complement = hall(an, pi.complement_in(all_primes(an))).subgroups.front();
  r.witnesses.push_back(make_witness(an, "Hall pi'-subgroup", complement));
  rhs = rhs && is(an, complement, K::propermutable);
  r.clauses = {{"pst", pst}, {"propermutable", rhs}};
  finish_equivalence(r);
  return r;
}

inline VerificationReport verify_theorem_5_2(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Thm5_2");
  auto G = an.whole();
  if (!is_soluble(an, G)) {
    mark_inapplicable(r, "group is not soluble");
    return r;
  }
  bool sqt = transitivity_class(an, Relation::s_quasipermutable).holds;
  auto D = residual(an, Formation::nilpotent());
  bool rhs = is_supersoluble(an, G) && is_hall(L, D, G) && is_nilpotent(an, D);
  std::optional<SubId> M;
  if (rhs) {
    for (auto m : complements(L, D, G))
      if (is_nilpotent(an, m)) {
        M = m;
        break;
      }
    rhs = M.has_value();
  }
  if (rhs) {
    for (SubId h = 0; h < L.size() && rhs; ++h) {
      auto n = L.normalizer(L.meet(h, D));
      auto index = an.group().order() / L.product_size(D, n);
      if (!primes_of(an, h).is_pi_number(index)) {
        rhs = false;
        r.witnesses.push_back(make_witness(an, "H with index condition failing", h));
      }
    }
  }
  r.witnesses.push_back(make_witness(an, "D (nilpotent residual)", D));
  if (M)
    r.witnesses.push_back(make_witness(an, "nilpotent complement M", *M));
  r.clauses = {{"sqt", sqt}, {"structure", rhs}};
  finish_equivalence(r);
  return r;
}

// ---------------------------------------------------------------------------
// Semi-normal Hall and Sylow subgroups
// ---------------------------------------------------------------------------

inline VerificationReport verify_corollary_5_3(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Cor5_3");
  Tally t(r);
  for (auto h : hall_subgroups(L, an.whole())) {
    if (!is(an, h, K::semi_normal))
      continue;
    bool ordered = true;
    for (auto p : primes_of(an, h))
      for (auto q : prime_divisors(an.group().order() / an.order(h)))
        ordered = ordered && p > q;
    t.add(ordered, L.is_normal(h),
          [&an, h](VerificationReport &rep, std::string_view what) {
            rep.witnesses.push_back(make_witness(an, std::string(what) + ": H", h));
          },
          !proper(an, h));
  }
  t.finish();
  return r;
}

inline VerificationReport verify_corollary_5_4(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Cor5_4");
  Tally t(r);
  auto G = an.whole();
  for (auto p : all_primes(an)) {
    PrimeSet ps{p};
    for (auto P : sylow_subgroups(an, G, p)) {
      if (!is(an, P, K::semi_normal))
        continue;
      bool i = is_pi_soluble(an, G, ps) &&
               L.contains(o_pi(an, ps), derived_subgroup(an, P));
      bool ii = i && pi_length(an, G, ps) <= 2;
      bool iii = true;
      auto p_prime = ps.complement_in(all_primes(an));
      for (auto E : hall(an, p_prime).subgroups)
        for (auto q : p_prime)
          if (is_p_supersoluble(an, E, q) && !is_p_supersoluble(an, G, q))
            iii = false;
      t.add(true, i && ii && iii,
            [&an, P](VerificationReport &rep, std::string_view what) {
              rep.witnesses.push_back(make_witness(an, std::string(what) + ": P", P));
            },
            !proper(an, P));
    }
  }
  t.finish();
  return r;
}

inline VerificationReport verify_corollary_5_5(Analysis &an)
{
  using namespace detail;
  auto const &L = an.lattice();
  auto r = start(an, "Cor5_5");
  Tally t(r);
  auto primes = all_primes(an);
  if (primes.empty()) {
    t.finish();
    return r;
  }
  auto p = primes.primes().back();
  for (auto P : sylow_subgroups(an, an.whole(), p))
    t.add(is(an, P, K::semi_normal), L.is_normal(P),
          [&an, P](VerificationReport &rep, std::string_view what) {
            rep.witnesses.push_back(make_witness(an, std::string(what) + ": P", P));
          },
          !proper(an, P));
  t.finish();
  return r;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct Statement
{
  std::string id;
  /// CLI selector: A, B, C, D, P1 or AUX.
  std::string family;
  std::function<VerificationReport(Analysis &)> run;
};

inline std::vector<Statement> const &all_statements()
{
  static std::vector<Statement> const list = [] {
    std::vector<Statement> s;
    s.push_back({"ThmA", "A", verify_theorem_A});
    s.push_back({"ThmB", "B", verify_theorem_B});
    s.push_back({"ThmC(N)", "C",
                 [](Analysis &an) { return verify_theorem_C(an, Formation::nilpotent()); }});
    s.push_back({"ThmC(U)", "C", [](Analysis &an) {
                   return verify_theorem_C(an, Formation::supersoluble());
                 }});
    s.push_back({"ThmD(U)", "D", [](Analysis &an) {
                   return verify_theorem_D(an, Formation::supersoluble());
                 }});
    s.push_back({"Prop1", "P1", verify_proposition_1});
    for (int part = 1; part <= 7; ++part)
      s.push_back({"Prop2_1(" + std::to_string(part) + ")", "AUX",
                   [part](Analysis &an) { return verify_proposition_2_1(an, part); }});
    s.push_back({"Prop2_2", "AUX", verify_proposition_2_2});
    s.push_back({"Prop2_3", "AUX", verify_proposition_2_3});
    for (auto part : {"I", "II", "III"})
      s.push_back({"Thm3_1(" + std::string(part) + ")", "AUX",
                   [part](Analysis &an) { return verify_theorem_3_1(an, part); }});
    s.push_back({"Lem3_4", "AUX", verify_lemma_3_4});
    s.push_back({"Lem3_5", "AUX", verify_lemma_3_5});
    s.push_back({"Thm5_1", "AUX", verify_theorem_5_1});
    s.push_back({"Thm5_2", "AUX", verify_theorem_5_2});
    s.push_back({"Cor5_3", "AUX", verify_corollary_5_3});
    s.push_back({"Cor5_4", "AUX", verify_corollary_5_4});
    s.push_back({"Cor5_5", "AUX", verify_corollary_5_5});
    return s;
  }();
  return list;
}

/// Statements selected by family tags (A, B, ...) or exact ids.
inline std::vector<Statement const *> select_statements(std::vector<std::string> const &tags)
{
  std::vector<Statement const *> out;
  for (auto const &s : all_statements()) {
    bool wanted = false;
    for (auto const &t : tags)
      wanted = wanted || t == s.family || t == s.id || t == "all";
    if (wanted)
      out.push_back(&s);
  }
  for (auto const &t : tags) {
    bool known = t == "all";
    for (auto const &s : all_statements())
      known = known || t == s.family || t == s.id;
    if (!known)
      throw usage_error("unknown statement '" + t + "'");
  }
  return out;
}

inline VerificationReport verify(Analysis &an, std::string_view id)
{
  for (auto const &s : all_statements())
    if (s.id == id)
      return s.run(an);
  throw usage_error("unknown statement '" + std::string(id) + "'");
}

} // namespace pst

#endif // PST_THEOREMS_HPP
