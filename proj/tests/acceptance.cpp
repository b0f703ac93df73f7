// Acceptance suite: ten criteria, one pass/fail line each.
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conlat/concept_lattice.hpp"
#include "conlat/formats.hpp"
#include "conlat/gen.hpp"
#include "conlat/quartet.hpp"
#include "conlat/verify.hpp"

using namespace conlat;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::string g_cli_path;

class Criterion {
public:
  Criterion(const char* name, double budget_seconds)
      : name_(name), budget_(budget_seconds), start_(Clock::now()) {}

  void expect(bool cond, const std::string& why) {
    if (!cond && ok_) {
      ok_ = false;
      note_ = why;
    }
  }

  void run(const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(false, std::string(err_name(e.kind())) + ": " + e.what());
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
  }

  ~Criterion() {
    const double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    if (secs > budget_) {
      ok_ = false;
      if (note_.empty()) note_ = "time budget exceeded";
    }
    std::printf("%s %s (%.2fs)%s%s\n", ok_ ? "PASS" : "FAIL", name_, secs,
                note_.empty() ? "" : " - ", note_.c_str());
    if (!ok_) ++g_failures;
  }

private:
  const char* name_;
  double budget_;
  Clock::time_point start_;
  bool ok_ = true;
  std::string note_;
};

IdxVec from_mask(std::uint32_t m, int n) {
  IdxVec v;
  for (int i = 0; i < n; ++i)
    if (m & (1u << i)) v.push_back(i);
  return v;
}

// brute-force concept oracle, independent of the library enumeration
std::vector<FormalConcept> oracle(const Classification& a) {
  std::vector<FormalConcept> out;
  for (std::uint32_t xm = 0; xm < (1u << a.instance_count()); ++xm)
    for (std::uint32_t ym = 0; ym < (1u << a.type_count()); ++ym) {
      IdxVec x = from_mask(xm, a.instance_count());
      IdxVec y = from_mask(ym, a.type_count());
      if (derive(a, Side::Instances, x) == y && derive(a, Side::Types, y) == x)
        out.push_back({x, y});
    }
  std::sort(out.begin(), out.end(),
            [&](const FormalConcept& l, const FormalConcept& r) {
              return Bits::of(a.instance_count(), l.extent)
                  .value_less(Bits::of(a.instance_count(), r.extent));
            });
  return out;
}

std::vector<Classification> fixture_contexts() {
  std::vector<Classification> out;
  out.push_back(Classification({}, {}, {}));
  out.push_back(k1_context());
  out.push_back(power({"x", "y"}, Side::Instances));
  std::vector<std::pair<Idx, Idx>> full;
  for (Idx x = 0; x < 3; ++x)
    for (Idx y = 0; y < 3; ++y) full.emplace_back(x, y);
  out.push_back(Classification(gen_labels("x", 3), gen_labels("y", 3), full));
  out.push_back(Classification(gen_labels("x", 3), gen_labels("y", 3), {}));
  return out;
}

std::string run_cli(const std::string& args, int* exit_code) {
  const std::string cmd = g_cli_path + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

struct PolarCase {
  GaloisConnection g;
  PolarFactorization pf;
  int context_index;  // into the small-context pool, -1 for function cases
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  const Clock::time_point suite_start = Clock::now();

  std::vector<Classification> pool = fixture_contexts();
  {
    Rng rng(20260809);
    for (int i = 0; i < 200; ++i) pool.push_back(gen_context(rng, 6, 6));
  }

  {
    Criterion c("criterion 01 concept enumeration equals brute force", 10.0);
    c.run([&] {
      for (const Classification& a : pool)
        c.expect(concepts(a) == oracle(a), "enumeration mismatch");
    });
  }

  {
    Criterion c("criterion 02 classification round trip", 5.0);
    c.run([&] {
      for (const Classification& a : pool) {
        const ConceptLattice l = clg(a);
        c.expect(clsn(l) == a, "clsn(clg(A)) differs from A");
        const RoundTrip rt = roundtrip_iso(l);
        c.expect(rt.rebuilt.size() == l.size(), "size mismatch after rebuild");
        for (Idx i = 0; i < rt.rebuilt.size(); ++i)
          c.expect(rt.backward[rt.forward[i]] == i, "not mutually inverse");
        for (Idx x = 0; x < l.size(); ++x)
          c.expect(rt.forward[rt.backward[x]] == x, "not mutually inverse");
        for (Idx i = 0; i < rt.rebuilt.size(); ++i)
          for (Idx j = 0; j < rt.rebuilt.size(); ++j)
            c.expect(rt.rebuilt.order.leq(i, j) ==
                         l.order.leq(rt.forward[i], rt.forward[j]),
                     "order not preserved and reflected");
      }
    });
  }

  // shared pool of polar factorizations over small base sets
  std::vector<Classification> small_contexts;
  std::vector<PolarCase> polar;
  {
    Rng rng(424242);
    for (int i = 0; i < 12; ++i) small_contexts.push_back(gen_context(rng, 4, 4));
    small_contexts.push_back(k1_context());
    for (int i = 0; i < static_cast<int>(small_contexts.size()); ++i) {
      GaloisConnection g = deriv_connection(small_contexts[i]);
      PolarFactorization pf = polar_factorize(g);
      polar.push_back(PolarCase{std::move(g), std::move(pf), i});
    }
    for (int i = 0; i < 12; ++i) {
      GaloisConnection g = from_function(gen_function(rng, 4, 4));
      PolarFactorization pf = polar_factorize(g);
      polar.push_back(PolarCase{std::move(g), std::move(pf), -1});
    }
  }

  {
    Criterion c("criterion 03 polar factorization laws", 10.0);
    c.run([&] {
      for (const PolarCase& pc : polar) {
        c.expect(classify_connection(pc.pf.refl).reflection, "refl flag");
        c.expect(classify_connection(pc.pf.corefl).coreflection, "corefl flag");
        const GaloisConnection comp = compose_galois(pc.pf.refl, pc.pf.corefl);
        for (Idx a = 0; a < pc.g.source().size(); ++a)
          c.expect(pc.g.target().equiv(comp.left(a), pc.g.left(a)), "left composite");
        for (Idx b = 0; b < pc.g.target().size(); ++b)
          c.expect(pc.g.source().equiv(comp.right(b), pc.g.right(b)),
                   "right composite");

        if (pc.context_index < 0) continue;
        const Classification& ctx = small_contexts[pc.context_index];
        const ConceptLattice l = clg(ctx);
        if (pc.pf.axis.size() != l.size()) {
          c.expect(false, "axis size differs from concept count");
          continue;
        }
        IdxVec to_concept(pc.pf.axis.size(), -1);
        for (int i = 0; i < pc.pf.axis.size(); ++i) {
          const IdxVec extent =
              from_mask(static_cast<std::uint32_t>(pc.pf.bipoles[i].first),
                        ctx.instance_count());
          for (Idx cc = 0; cc < l.size(); ++cc)
            if (l.concepts[cc].extent == extent) to_concept[i] = cc;
        }
        for (int i = 0; i < pc.pf.axis.size(); ++i) {
          c.expect(to_concept[i] >= 0, "bipole without matching concept");
          if (to_concept[i] < 0) continue;
          for (int j = 0; j < pc.pf.axis.size(); ++j)
            c.expect(pc.pf.axis.leq(i, j) ==
                         l.order.leq(to_concept[i], to_concept[j]),
                     "axis order differs from concept order");
        }
      }
    });
  }

  {
    Criterion c("criterion 04 induced complete lattice identities", 60.0);
    c.run([&] {
      int enumerated = 0;
      for (const PolarCase& pc : polar) {
        if (pc.pf.axis.size() > 10) continue;
        const GaloisConnection& refl = pc.pf.refl;
        const Preorder& A = refl.source();
        const Preorder& B = refl.target();
        for (std::uint32_t m = 0; m < (1u << B.size()); ++m) {
          const IdxVec S = from_mask(m, B.size());
          IdxVec gS;
          for (Idx b : S) gS.push_back(refl.right(b));
          const Idx joinA = A.extremum(gS, Extremum::Join);
          const Idx meetA = A.extremum(gS, Extremum::Meet);
          const Idx joinB = B.extremum(S, Extremum::Join);
          const Idx meetB = B.extremum(S, Extremum::Meet);
          c.expect(B.equiv(joinB, refl.left(joinA)), "join identity");
          c.expect(B.equiv(meetB, refl.left(meetA)), "meet identity");
          c.expect(A.equiv(refl.right(joinB), refl.closure(joinA)), "right of join");
          c.expect(A.equiv(refl.right(meetB), meetA), "right of meet");
        }
        const GaloisConnection& cor = pc.pf.corefl;
        const Preorder& CA = cor.source();
        const Preorder& CB = cor.target();
        for (std::uint32_t m = 0; m < (1u << CA.size()); ++m) {
          const IdxVec S = from_mask(m, CA.size());
          IdxVec gS;
          for (Idx a : S) gS.push_back(cor.left(a));
          const Idx joinB = CB.extremum(gS, Extremum::Join);
          const Idx meetB = CB.extremum(gS, Extremum::Meet);
          const Idx joinA = CA.extremum(S, Extremum::Join);
          const Idx meetA = CA.extremum(S, Extremum::Meet);
          c.expect(CA.equiv(meetA, cor.right(meetB)), "meet identity");
          c.expect(CA.equiv(joinA, cor.right(joinB)), "join identity");
          c.expect(CB.equiv(cor.left(meetA), cor.interior(meetB)), "left of meet");
          c.expect(CB.equiv(cor.left(joinA), joinB), "left of join");
        }
        const InducedLatticeReport r1 = check_induced_lattice(refl);
        const InducedLatticeReport r2 = check_induced_lattice(cor);
        c.expect(r1.as_reflection && r2.as_coreflection, "library check disagrees");
        ++enumerated;
      }
      c.expect(enumerated >= 10, "too few connections within the size cap");
    });
  }

  {
    Criterion c("criterion 05 diagonal fill-in existence and uniqueness", 20.0);
    c.run([&] {
      int squares = 0;
      for (const PolarCase& pc : polar) {
        const int k = pc.pf.axis.size();
        if (k > 4 || k == 0) continue;
        IdxVec perm(k);
        for (int i = 0; i < k; ++i) perm[i] = (i + 1) % k;
        auto [axis2, iso] = permuted_copy(pc.pf.axis, perm, "p");
        IdxVec inv(k);
        for (int i = 0; i < k; ++i) inv[perm[i]] = i;
        const GaloisConnection iso_back(axis2, pc.pf.axis, inv, perm);
        const GaloisConnection r = compose_galois(pc.pf.refl, iso);
        const GaloisConnection m = compose_galois(iso_back, pc.pf.corefl);
        const GaloisConnection h = diagonal_fill(pc.pf.refl, m, r, pc.pf.corefl);
        c.expect(compose_galois(pc.pf.refl, h).same_up_to_equiv(r), "e*h = r");
        c.expect(compose_galois(h, m).same_up_to_equiv(pc.pf.corefl), "h*m = s");
        int hits = 0;
        for (const GaloisConnection& cand : enumerate_connections(pc.pf.axis, axis2))
          if (compose_galois(pc.pf.refl, cand).same_up_to_equiv(r) &&
              compose_galois(cand, m).same_up_to_equiv(pc.pf.corefl))
            ++hits;
        c.expect(hits == 1,
                 "expected exactly one diagonal, found " + std::to_string(hits));
        ++squares;
      }
      c.expect(squares >= 5, "too few squares within the size cap");
    });
  }

  {
    Criterion c("criterion 06 derivation laws", 60.0);
    c.run([&] {
      Rng rng(606060);
      std::vector<Classification> dpool = fixture_contexts();
      for (int i = 0; i < 40; ++i) dpool.push_back(gen_context(rng, 5, 5));
      for (const Classification& a : dpool) {
        for (int side = 0; side < 2; ++side) {
          const Side s = side == 0 ? Side::Instances : Side::Types;
          const Side other = side == 0 ? Side::Types : Side::Instances;
          const int n = side == 0 ? a.instance_count() : a.type_count();
          std::vector<IdxVec> der(std::size_t{1} << n);
          for (std::uint32_t m = 0; m < (1u << n); ++m)
            der[m] = derive(a, s, from_mask(m, n));
          for (std::uint32_t m1 = 0; m1 < (1u << n); ++m1) {
            const IdxVec clo = derive(a, other, der[m1]);
            const IdxVec x = from_mask(m1, n);
            c.expect(std::includes(clo.begin(), clo.end(), x.begin(), x.end()),
                     "closure not extensive");
            std::uint32_t clom = 0;
            for (Idx i : clo) clom |= 1u << i;
            c.expect(der[clom] == der[m1], "derivation differs on the closure");
            for (std::uint32_t m2 = 0; m2 < (1u << n); ++m2) {
              if ((m1 & m2) == m1)
                c.expect(std::includes(der[m1].begin(), der[m1].end(),
                                       der[m2].begin(), der[m2].end()),
                         "derivation not antitone");
              IdxVec both;
              std::set_intersection(der[m1].begin(), der[m1].end(),
                                    der[m2].begin(), der[m2].end(),
                                    std::back_inserter(both));
              c.expect(der[m1 | m2] == both, "union law fails");
            }
          }
        }
      }
    });
  }

  {
    Criterion c("criterion 07 infomorphism validity predicates agree", 60.0);
    c.run([&] {
      Rng rng(707070);
      int valid = 0, invalid = 0;
      for (int i = 0; i < 500; ++i) {
        const CandidateInfomorphism cand = gen_candidate(rng);
        const bool fc = fundamental_condition_holds(cand.source, cand.target,
                                                    cand.inst_map, cand.typ_map);
        const bool en = ext_naturality_holds(cand.source, cand.target,
                                             cand.inst_map, cand.typ_map);
        const bool in = int_naturality_holds(cand.source, cand.target,
                                             cand.inst_map, cand.typ_map);
        c.expect(fc == en && fc == in, "predicates disagree");
        if (cand.intended_valid) c.expect(fc, "constructed infomorphism invalid");
        (fc ? valid : invalid)++;
      }
      c.expect(valid >= 100 && invalid >= 50, "candidate mix is degenerate");
    });
  }

  std::vector<Infomorphism> fs;
  {
    const Classification k1 = k1_context();
    fs.push_back(Infomorphism::identity(k1));
    auto [eta, eps] = unit_counit(k1);
    fs.push_back(eta);
    fs.push_back(eps);
    fs.push_back(compose_infomorphisms(eps, eta));
    Rng rng(808080);
    for (int i = 0; i < 50; ++i) {
      const Classification a = gen_context(rng, 4, 4);
      fs.push_back(gen_infomorphism(rng, a, 2, 2));
    }
  }

  std::vector<std::pair<std::size_t, ConceptMorphism>> hs;
  {
    Criterion c("criterion 08 concept morphisms from infomorphisms", 60.0);
    c.run([&] {
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const Infomorphism& f = fs[i];
        ConceptMorphism h = clg_morphism(f);  // includes check_concept_morphism
        if (h.source.size() <= 12 && h.target.size() <= 12) {
          for (std::uint32_t m = 0; m < (1u << h.target.size()); ++m) {
            const IdxVec cs = from_mask(m, h.target.size());
            IdxVec img;
            for (Idx cc : cs) img.push_back(h.left[cc]);
            c.expect(h.left[h.target.order.extremum(cs, Extremum::Join)] ==
                         h.source.order.extremum(img, Extremum::Join),
                     "left not join-continuous");
          }
          for (std::uint32_t m = 0; m < (1u << h.source.size()); ++m) {
            const IdxVec cs = from_mask(m, h.source.size());
            IdxVec img;
            for (Idx cc : cs) img.push_back(h.right[cc]);
            c.expect(h.right[h.source.order.extremum(cs, Extremum::Meet)] ==
                         h.target.order.extremum(img, Extremum::Meet),
                     "right not meet-continuous");
          }
        }
        hs.emplace_back(i, std::move(h));
      }
    });
  }

  {
    Criterion c("criterion 09 quartet factorization", 60.0);
    c.run([&] {
      int done = 0;
      for (const auto& [fi, h] : hs) {
        const Infomorphism& f = fs[fi];
        if (f.source().instance_count() > 5 || f.target().instance_count() > 5 ||
            f.source().type_count() > 5 || f.target().type_count() > 5)
          continue;
        auto [extent1, intent1] = extent_intent_adjunctions(h.source);
        auto [extent2, intent2] = extent_intent_adjunctions(h.target);
        const GaloisConnection adj = h.adjoint();
        const GaloisConnection dir_inst = from_function(SetFunction(
            f.target().instances(), f.source().instances(), f.inst_table()));
        const GaloisConnection inv_typ = from_function_op(SetFunction(
            f.source().types(), f.target().types(), f.typ_table()));

        const Quartet eq = check_quartet(extent2, extent1, dir_inst, adj);
        const GaloisConnection cc = factor_reflection_quartet(eq);
        const KernelFactorization k1f = kernel_factorize(eq.g1);
        const KernelFactorization k2f = kernel_factorize(eq.g2);
        check_quartet(k1f.clo, k2f.clo, eq.a, cc);
        check_quartet(k1f.lift0, k2f.lift0, cc, eq.b);

        const Quartet iq = check_quartet(intent2, intent1, adj, inv_typ);
        const GaloisConnection d = factor_coreflection_quartet(iq);
        const KernelFactorization k1i = kernel_factorize(iq.g1);
        const KernelFactorization k2i = kernel_factorize(iq.g2);
        check_quartet(k1i.lift1, k2i.lift1, iq.a, d);
        check_quartet(k1i.intr, k2i.intr, d, iq.b);

        // theory bindings: closure then type preimage on the left, type
        // direct image on the right
        const TheoryLattice th2 = theories(h.target);
        for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(d.source().size());
             ++m) {
          std::uint32_t pre = 0;
          for (Idx y1 = 0; y1 < f.source().type_count(); ++y1)
            if (th2.closure[m] & (1u << f.typ(y1))) pre |= 1u << y1;
          c.expect(static_cast<std::uint32_t>(d.left(static_cast<Idx>(m))) == pre,
                   "theory left leg binding");
        }
        for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(d.target().size());
             ++m) {
          std::uint32_t img = 0;
          for (Idx y1 = 0; y1 < f.source().type_count(); ++y1)
            if (m & (1u << y1)) img |= 1u << f.typ(y1);
          c.expect(static_cast<std::uint32_t>(d.right(static_cast<Idx>(m))) == img,
                   "theory right leg binding");
        }
        ++done;
      }
      c.expect(done >= 20, "too few quartets within the size cap");
    });
  }

  {
    Criterion c("criterion 10 formats and CLI determinism", 60.0);
    c.run([&] {
      Rng rng(101010);
      for (int i = 0; i < 50; ++i) {
        const Classification a = gen_context(rng, 6, 6);
        c.expect(io::parse_cxt(io::emit_cxt(a)) == a, "cxt round trip");
      }
      const std::string dot = io::emit_dot(clg(k1_context()));
      int nodes = 0, edges = 0;
      std::istringstream in(dot);
      std::string line;
      while (std::getline(in, line)) {
        if (line.find("label=") != std::string::npos) ++nodes;
        if (line.find("->") != std::string::npos) ++edges;
      }
      c.expect(nodes == 2 && edges == 1, "clg(K1) diagram should be 2 nodes, 1 edge");

      if (g_cli_path.empty()) {
        c.expect(false, "cli path not provided");
        return;
      }
      int code1 = 0, code2 = 0;
      const std::string out1 = run_cli("verify --seed 7 --cases 40", &code1);
      const std::string out2 = run_cli("verify --seed 7 --cases 40", &code2);
      c.expect(code1 == 0, "verify exit code " + std::to_string(code1));
      c.expect(code2 == 0, "verify exit code " + std::to_string(code2));
      c.expect(!out1.empty() && out1 == out2, "verify output not reproducible");
    });
  }

  const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  const bool in_budget = total <= 60.0;
  std::printf("%s full suite in %.2fs (budget 60s)\n", in_budget ? "PASS" : "FAIL",
              total);
  if (!in_budget) ++g_failures;

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
