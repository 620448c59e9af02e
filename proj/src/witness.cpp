#include "horn/witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "horn/fillings.hpp"

namespace horn {

namespace {

Rat rel_trace(const Subspace& s, int total_dim) {
  return rat(s.dim(), total_dim);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace

ConstructThree construct_three(const Subspace& w, const std::array<Subspace, 3>& e,
                               const Rat& beta) {
  const int nw = w.dim();
  require(nw > 0, "construct_three: empty ambient");
  require(beta > 0 && beta <= rat(2, 5), "construct_three: beta outside (0, 2/5]");
  const Rat scaled = beta * nw;
  require(scaled.get_den() == 1, "construct_three: beta*dim(w) not integral");
  const long bn = scaled.get_num().get_si();
  require(bn % 2 == 0, "construct_three: beta*dim(w) must be even");
  for (const Subspace& ei : e) {
    require(w.contains(ei), "construct_three: e_i not inside ambient");
    require(rel_trace(ei, nw) >= rat(1, 2) + beta / 4,
            "construct_three: trace(e_i) below 1/2 + beta/4");
  }

  const Subspace q0 = meet(e[0], meet(e[1], e[2]));
  const long z = q0.dim();

  ConstructThree out;
  if (z >= bn) {
    out.p = q0.prefix(static_cast<int>(bn));
    out.branch = 1;
  } else {
    // pairwise meets with the common core removed, relabeled so that the
    // dimensions are non-increasing
    std::array<Subspace, 3> m = {ominus(meet(e[1], e[2]), q0), ominus(meet(e[0], e[2]), q0),
                                 ominus(meet(e[0], e[1]), q0)};
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m[static_cast<std::size_t>(a)].dim() >
                                                m[static_cast<std::size_t>(b)].dim(); });
    const Subspace E1 = e[static_cast<std::size_t>(order[0])];
    const Subspace E2 = e[static_cast<std::size_t>(order[1])];
    const Subspace E3 = e[static_cast<std::size_t>(order[2])];
    const Subspace Q1 = m[static_cast<std::size_t>(order[0])];
    const Subspace Q2 = m[static_cast<std::size_t>(order[1])];
    const Subspace Q3 = m[static_cast<std::size_t>(order[2])];
    const long z1 = Q1.dim(), z2 = Q2.dim(), z3 = Q3.dim();

    if (z1 + z2 >= bn - z) {
      // enough mass in the two largest pairwise meets; trim them to size and
      // top up inside E1 and E2 directly
      const long cap2 = (bn - z + 1) / 2;
      const long cap3 = (bn - z) / 2;
      const long d2 = std::min(z2, cap2);
      const long d3 = std::min(z3, cap3);
      const long d1 = bn - z - d2;
      ensure(d1 >= 0 && d1 <= z1, "construct_three: q1 slice infeasible");
      const Subspace q1s = Q1.prefix(static_cast<int>(d1));
      const Subspace q2s = Q2.prefix(static_cast<int>(d2));
      const Subspace q3s = Q3.prefix(static_cast<int>(d3));

      const Subspace used1 = join(q0, join(q2s, q3s));
      const long need4 = bn - z - d2 - d3;
      const Subspace avail4 = ominus(E1, used1);
      ensure(need4 >= 0 && avail4.dim() >= need4, "construct_three: no room for q4 in e1");
      const Subspace q4 = avail4.prefix(static_cast<int>(need4));

      const Subspace used2 = join(q0, join(q1s, q3s));
      const long need5 = bn - z - d1 - d3;
      const Subspace avail5 = ominus(E2, used2);
      ensure(need5 >= 0 && avail5.dim() >= need5, "construct_three: no room for q5 in e2");
      const Subspace q5 = avail5.prefix(static_cast<int>(need5));

      out.p = join(join(q0, q1s), join(join(q2s, q3s), join(q4, q5)));
      out.branch = 2;
    } else {
      // scarce pairwise meets; pick f inside e3 against e1 join e2 and push
      // it into e1 and e2 through the complementary idempotents
      const Subspace e1r = ominus(E1, q0);
      const Subspace e2r = ominus(E2, q0);
      const Subspace f_avail = meet(ominus(E3, join(join(Q1, Q2), q0)), join(e1r, e2r));
      const long need_f = bn - z1 - z2 - z;
      ensure(need_f >= 0, "construct_three: negative f target");
      ensure(f_avail.dim() >= need_f, "construct_three: no room for f");
      const Subspace f = f_avail.prefix(static_cast<int>(need_f));

      const auto [op1, op2] = complementary_idempotents(e1r, e2r, w);
      const Subspace r1 = sharp(op1, f);
      const Subspace r2 = sharp(op2, f);

      const Subspace block1 = join(r1, join(Q2, Q3));
      const long need_s1 = bn - z - block1.dim();
      const Subspace avail_s1 = ominus(E1, join(q0, block1));
      ensure(need_s1 >= 0 && avail_s1.dim() >= need_s1, "construct_three: no room for s1");
      const Subspace s1 = avail_s1.prefix(static_cast<int>(need_s1));

      const Subspace block2 = join(r2, join(Q1, Q3));
      const long need_s2 = bn - z - block2.dim();
      const Subspace avail_s2 = ominus(E2, join(q0, block2));
      ensure(need_s2 >= 0 && avail_s2.dim() >= need_s2, "construct_three: no room for s2");
      const Subspace s2 = avail_s2.prefix(static_cast<int>(need_s2));

      out.p = join(join(join(q0, Q1), join(Q2, Q3)),
                   join(join(r1, r2), join(s1, s2)));
      out.branch = 3;
    }
  }

  ensure(2 * out.p.dim() <= 3 * bn, "construct_three: trace bound violated");
  for (const Subspace& ei : e)
    ensure(meet(out.p, ei).dim() >= bn, "construct_three: meet bound violated");
  return out;
}

AlmostInvariant almost_invariant(const RatMatrix& X, int t_dim, int eps_dim) {
  const Subspace dom = domain(X);
  require(eps_dim >= 1, "almost_invariant: eps_dim < 1");
  require(t_dim >= 0 && t_dim <= dom.dim(), "almost_invariant: t_dim out of range");

  if (t_dim <= eps_dim) {
    const Subspace p = dom.prefix(t_dim);
    return {p, sharp(X, p)};
  }
  auto [pt, qt] = almost_invariant(X, t_dim - eps_dim, eps_dim);
  Subspace fresh = ominus(qt, meet(pt, qt));
  if (fresh.dim() < eps_dim) {
    const Subspace avail = ominus(dom, join(pt, fresh));
    ensure(avail.dim() >= eps_dim - fresh.dim(), "almost_invariant: cannot pad q");
    fresh = join(fresh, avail.prefix(eps_dim - fresh.dim()));
  }
  const Subspace p = join(pt, fresh);
  ensure(p.dim() == t_dim, "almost_invariant: dimension drift");
  return {p, sharp(X, fresh)};
}

VerifyReport verify_pn(const Subspace& p, const HornTriple& t, const Flag& e, const Flag& f,
                       const Flag& g, const Rat& eps) {
  const int n = t.n, r = t.r();
  const Subspace& w = e.space();
  require(f.space() == w && g.space() == w, "verify_pn: flags over different spaces");
  require(w.contains(p), "verify_pn: p outside the flag space");
  const int nw = w.dim();
  require(nw % n == 0, "verify_pn: dim not divisible by n");
  const int d = nw / n;

  VerifyReport report;
  report.rows.push_back(
      {"tau(p) <= r/n + eps", rel_trace(p, nw), rat(r, n) + eps, /*at_least=*/false});
  const std::array<std::pair<const Flag*, const IndexSet*>, 3> flags = {
      std::pair{&e, &t.I}, std::pair{&f, &t.J}, std::pair{&g, &t.K}};
  const std::array<std::string, 3> names = {"e", "f", "g"};
  for (std::size_t a = 0; a < 3; ++a) {
    for (int l = 1; l <= r; ++l) {
      const int idx = flags[a].second->entry(l);
      const Subspace level = flags[a].first->level(idx * d);
      report.rows.push_back({"tau(" + names[a] + "_{" + std::to_string(idx) + "/" +
                                 std::to_string(n) + "} ^ p) >= " + std::to_string(l) + "/" +
                                 std::to_string(n),
                             rel_trace(meet(level, p), nw), rat(l, n), /*at_least=*/true});
    }
  }
  return report;
}

namespace {

// Checks that an irreducible chain end is the r = 3 closed-form family
// member with adjacent middle entry, i.e. ({m,m+1,n},{m,m+1,n},{m,m+1,n}).
void check_r3_base_shape(const HornTriple& t) {
  ensure(t.I == t.J && t.J == t.K, "witness_pn: irreducible r=3 end is not diagonal");
  const int m = t.I.entry(1);
  ensure(t.I.entry(2) == m + 1 && t.I.entry(3) == t.n && t.n == 2 * m + 1,
         "witness_pn: irreducible r=3 end is not the (m,m+1,2m+1) family");
}

Subspace solve_pn(const HornTriple& t, const Subspace& w, const Flag& e, const Flag& f,
                  const Flag& g, TripleCache& cache);

Subspace lift_witness_impl(const HornTriple& t, const ReductionWitness& wit, const Flag& e,
                           const Flag& f, const Flag& g, TripleCache& cache,
                           const WitnessSolver& solve_below) {
  const int n = t.n, r = t.r();
  const Subspace& w = e.space();
  require(f.space() == w && g.space() == w, "lift_witness: flags over different spaces");
  const int nw = w.dim();
  require(nw % n == 0, "lift_witness: dim not divisible by n");
  const int d = nw / n;
  require(is_valid_reduction(t, wit), "lift_witness: invalid witness for the triple");

  const HornTriple reduced = reduce(t, wit);
  auto set = enumerate_t(reduced.n, r, Variant::tilde, cache);
  ensure(contains_triple(*set, reduced),
         "lift_witness: reduction left the tilde set at " + reduced.str());

  const int iu = t.I.entry_or_zero(wit.u);
  const int jv = t.J.entry_or_zero(wit.v);
  const int kw = t.K.entry_or_zero(wit.w);
  const Subspace base = join(e.level(iu * d), join(f.level(jv * d), g.level(kw * d)));
  const int nq = (n - 1) * d;
  ensure(base.dim() <= nq, "lift_witness: cut levels exceed the cut-down trace");
  const Subspace q = extend_within(base, w, nq);

  // One elimination per flag refines the whole cut-down superflag: express
  // q's basis in flag coordinates and echelonize against the highest
  // coordinate, so each resulting vector enters the flag of q exactly at the
  // level where the chain first admits it.
  const auto cut_flag = [&](const Flag& fl, int cut) {
    const RatMatrix& b = fl.ordered_basis();
    const int dw = w.dim();
    // coordinates of q's basis in the flag basis: solve the column system
    // b^T coords^T = q^T in one elimination
    RatMatrix aug(w.ambient(), dw + nq);
    for (int i = 0; i < dw; ++i)
      for (int j = 0; j < w.ambient(); ++j) aug.at(j, i) = b.at(i, j);
    for (int i = 0; i < nq; ++i)
      for (int j = 0; j < w.ambient(); ++j) aug.at(j, dw + i) = q.basis().at(i, j);
    const auto aug_pivots = aug.rref();
    ensure(static_cast<int>(aug_pivots.size()) >= dw && aug_pivots[static_cast<std::size_t>(dw) - 1] == dw - 1,
           "lift_witness: flag basis lost rank");
    RatMatrix g_part(nq, dw);
    for (int i = 0; i < nq; ++i)
      for (int j = 0; j < dw; ++j) g_part.at(i, j) = aug.at(j, dw + i);
    RatMatrix vecs = q.basis();
    std::vector<int> last(static_cast<std::size_t>(nq), -1);
    std::vector<bool> done(static_cast<std::size_t>(nq), false);
    for (int col = dw - 1; col >= 0; --col) {
      int pivot = -1;
      for (int i = 0; i < nq; ++i)
        if (!done[static_cast<std::size_t>(i)] && g_part.at(i, col) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      for (int i = 0; i < nq; ++i) {
        if (i == pivot || done[static_cast<std::size_t>(i)] || g_part.at(i, col) == 0) continue;
        const Rat factor = g_part.at(i, col) / g_part.at(pivot, col);
        for (int j = 0; j <= col; ++j) g_part.at(i, j) -= factor * g_part.at(pivot, j);
        for (int j = 0; j < vecs.cols(); ++j) vecs.at(i, j) -= factor * vecs.at(pivot, j);
      }
      done[static_cast<std::size_t>(pivot)] = true;
      last[static_cast<std::size_t>(pivot)] = col + 1;  // 1-based flag position
    }
    std::vector<int> order(static_cast<std::size_t>(nq));
    for (int i = 0; i < nq; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int bb) {
      return last[static_cast<std::size_t>(a)] < last[static_cast<std::size_t>(bb)];
    });
    RatMatrix rows(nq, vecs.cols());
    for (int c = 0; c < nq; ++c) {
      const int src = order[static_cast<std::size_t>(c)];
      ensure(last[static_cast<std::size_t>(src)] >= 1, "lift_witness: coordinate rank deficit");
      // the (c+1)-st flag level must sit inside the chain element there
      const int threshold = (c + 1) <= cut * d ? (c + 1) : (c + 1) + d;
      ensure(last[static_cast<std::size_t>(src)] <= threshold,
             "lift_witness: superflag dimension deficit");
      for (int j = 0; j < vecs.cols(); ++j) rows.at(c, j) = vecs.at(src, j);
    }
    rows.primitivize_rows();  // fractions would fatten the next level's work
    return Flag(q, std::move(rows));
  };
  const Flag et = cut_flag(e, iu);
  const Flag ft = cut_flag(f, jv);
  const Flag gt = cut_flag(g, kw);
  return solve_below(reduced, et, ft, gt);
}

Subspace solve_pn(const HornTriple& t, const Subspace& w, const Flag& e, const Flag& f,
                  const Flag& g, TripleCache& cache) {
  const int n = t.n, r = t.r();
  const int nw = w.dim();
  require(nw % n == 0, "witness_pn: dim(w) not divisible by n");
  const int d = nw / n;

  if (n == r) return w;  // diagonal triple: the full space works

  const auto wits = reduction_witnesses(t);
  if (wits.empty()) {
    if (r != 3) throw std::invalid_argument("witness_pn: unsupported irreducible triple " + t.str());
    check_r3_base_shape(t);
    const int m = t.I.entry(1);
    ensure(m >= 2, "witness_pn: m = 1 has n = r");  // n > r here
    const std::array<Subspace, 3> tops = {e.level((m + 1) * d), f.level((m + 1) * d),
                                          g.level((m + 1) * d)};
    const ConstructThree res = construct_three(w, tops, rat(2, n));
    return extend_within(res.p, w, r * d);  // pad to trace exactly r/n
  }

  return lift_witness_impl(t, wits.front(), e, f, g, cache,
                           [&cache](const HornTriple& below, const Flag& eb, const Flag& fb,
                                    const Flag& gb) {
                             return solve_pn(below, eb.space(), eb, fb, gb, cache);
                           });
}

void check_supported(const HornTriple& t, TripleCache& cache) {
  const int r = t.r();
  require(t.n == r || r <= 3, "witness_pn: only diagonal triples and r <= 3 are supported");
  auto set = enumerate_t(t.n, r, Variant::tilde, cache);
  require(contains_triple(*set, t), "witness_pn: triple not in the tilde set: " + t.str());
  if (t.n != r && r == 3)
    require(lr_of_triple(t) == 1, "witness_pn: r = 3 requires an LR-minimal triple");
}

}  // namespace

Subspace base_witness(const HornTriple& t, const Flag& e, const Flag& f, const Flag& g) {
  require(t.n == t.r(), "base_witness: triple is not diagonal");
  const Subspace& w = e.space();
  require(f.space() == w && g.space() == w, "base_witness: flags over different spaces");
  return w;
}

Subspace lift_witness(const HornTriple& t, const ReductionWitness& wit, const Flag& e,
                      const Flag& f, const Flag& g, TripleCache& cache,
                      const WitnessSolver& solve_below) {
  return lift_witness_impl(t, wit, e, f, g, cache, solve_below);
}

Subspace witness_pn(const HornTriple& t, const Flag& e, const Flag& f, const Flag& g,
                    TripleCache& cache) {
  check_supported(t, cache);
  const Subspace& w = e.space();
  require(f.space() == w && g.space() == w, "witness_pn: flags over different spaces");
  return solve_pn(t, w, e, f, g, cache);
}

int min_dimension(const HornTriple& t, TripleCache& cache) {
  check_supported(t, cache);
  const ReductionChain chain = reduce_to_irreducible(t, cache);
  const HornTriple& end = chain.end();
  if (end.n != end.r() && end.r() == 3) check_r3_base_shape(end);
  // every dimension the pipeline meets is an integer multiple of d, and the
  // even-ness demanded of beta*dim at the base is 2d, so d = 1 suffices
  return t.n;
}

namespace {

const char* wheel_check(const std::array<Subspace, 3>& e, const std::array<Subspace, 3>& f,
                        int nw) {
  for (int i = 0; i < 3; ++i) {
    if (3 * e[static_cast<std::size_t>(i)].dim() != nw) return "tau(e_i) != 1/3";
    if (3 * f[static_cast<std::size_t>(i)].dim() != 2 * nw) return "tau(f_i) != 2/3";
    if (!f[static_cast<std::size_t>(i)].contains(e[static_cast<std::size_t>(i)]))
      return "e_i not below f_i";
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (meet(e[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]).dim() != 0)
        return "e_i ^ f_j != 0";
    }
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    if (meet(e[static_cast<std::size_t>(k)],
             join(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]))
            .dim() != 0)
      return "e_k ^ (e_i v e_j) != 0";
  }
  return nullptr;
}

}  // namespace

WheelResult wheel_construction(const std::array<Subspace, 3>& e, const std::array<Subspace, 3>& f,
                               const Rat& eps) {
  const int nw = e[0].ambient();
  for (const auto& s : e) require(s.ambient() == nw, "wheel: ambient mismatch");
  for (const auto& s : f) require(s.ambient() == nw, "wheel: ambient mismatch");
  require(nw % 6 == 0, "wheel: dimension not divisible by 6");
  const Rat eps_scaled = eps * nw;
  require(eps_scaled.get_den() == 1 && eps_scaled >= 1, "wheel: eps not a multiple of 1/N >= 1/N");
  const int eps_dim = static_cast<int>(eps_scaled.get_num().get_si());
  if (const char* violated = wheel_check(e, f, nw))
    throw std::invalid_argument(std::string("wheel: hypothesis failed: ") + violated);

  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      ensure(3 * meet(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]).dim() == nw,
             "wheel: tau(f_i ^ f_j) != 1/3");

  // spokes between consecutive hubs
  const Subspace a3 = meet(f[2], join(e[0], e[1]));
  const Subspace a1 = meet(f[0], join(e[1], e[2]));
  const Subspace a2 = meet(f[1], join(e[0], e[2]));
  for (const Subspace* s : {&a1, &a2, &a3})
    ensure(3 * s->dim() == nw, "wheel: spoke trace != 1/3");

  const Subspace whole = Subspace::full(nw);
  const auto oblique = [&](const Subspace& onto, const Subspace& along, const Subspace& from) {
    return complementary_idempotents(onto, along, whole).first * projection_matrix(from);
  };
  const RatMatrix t12 = oblique(a3, e[1], e[0]);
  const RatMatrix s21 = oblique(e[1], e[0], a3);
  const RatMatrix t23 = oblique(a1, e[2], e[1]);
  const RatMatrix s32 = oblique(e[2], e[1], a1);
  const RatMatrix t31 = oblique(a2, e[0], e[2]);
  const RatMatrix s13 = oblique(e[0], e[2], a2);
  const RatMatrix X = s13 * t31 * s32 * t23 * s21 * t12;

  if (!(domain(X) == e[0] && sharp(X, e[0]) == e[0]))
    throw std::invalid_argument("wheel: hypothesis failed: cycle operator not bijective on e_1");

  const auto [q1, slack] = almost_invariant(X, nw / 6, eps_dim);
  const Subspace r3 = sharp(t12, q1);
  const Subspace q2 = sharp(s21, r3);
  const Subspace r1 = sharp(t23, q2);
  const Subspace q3 = sharp(s32, r1);
  const Subspace r2 = sharp(t31, q3);
  const Subspace xq1 = sharp(s13, r2);
  ensure(xq1 == sharp(X, q1), "wheel: cycle image mismatch");
  for (const Subspace* s : {&q1, &q2, &q3, &r1, &r2, &r3, &xq1})
    ensure(6 * s->dim() == nw, "wheel: transported trace != 1/6");

  WheelResult out;
  out.p = join(join(q1, q2), join(q3, xq1));
  out.report.rows.push_back(
      {"tau(p) <= 1/2 + eps", rel_trace(out.p, nw), rat(1, 2) + eps, /*at_least=*/false});
  for (int i = 0; i < 3; ++i)
    out.report.rows.push_back({"tau(p ^ e_" + std::to_string(i + 1) + ") >= 1/6",
                               rel_trace(meet(out.p, e[static_cast<std::size_t>(i)]), nw),
                               rat(1, 6), true});
  for (int i = 0; i < 3; ++i)
    out.report.rows.push_back({"tau(p ^ f_" + std::to_string(i + 1) + ") >= 1/3",
                               rel_trace(meet(out.p, f[static_cast<std::size_t>(i)]), nw),
                               rat(1, 3), true});
  ensure(out.report.ok(), "wheel: postcondition violated");
  return out;
}

std::pair<std::array<Subspace, 3>, std::array<Subspace, 3>> wheel_configuration(
    int ambient, std::uint64_t seed) {
  require(ambient % 6 == 0 && ambient > 0, "wheel_configuration: dimension not divisible by 6");
  // small entries keep the six-fold operator product tractable; genericity is
  // re-checked against the hypotheses either way
  std::uniform_int_distribution<int> entry(-3, 3);
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
    std::array<Subspace, 3> e, f;
    for (int i = 0; i < 3; ++i) {
      RatMatrix basis(ambient, ambient);
      do {
        for (int r = 0; r < ambient; ++r)
          for (int c = 0; c < ambient; ++c) basis.at(r, c) = entry(rng);
      } while (basis.rank() != ambient);
      RatMatrix third(ambient / 3, ambient);
      RatMatrix two_thirds(2 * ambient / 3, ambient);
      for (int r = 0; r < ambient / 3; ++r)
        for (int c = 0; c < ambient; ++c) third.at(r, c) = basis.at(r, c);
      for (int r = 0; r < 2 * ambient / 3; ++r)
        for (int c = 0; c < ambient; ++c) two_thirds.at(r, c) = basis.at(r, c);
      e[static_cast<std::size_t>(i)] = Subspace::span(std::move(third));
      f[static_cast<std::size_t>(i)] = Subspace::span(std::move(two_thirds));
    }
    if (wheel_check(e, f, ambient) == nullptr) return {e, f};
  }
  throw std::runtime_error("wheel_configuration: no general-position sample found");
}

}  // namespace horn
