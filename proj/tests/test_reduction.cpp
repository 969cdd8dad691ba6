#include <gtest/gtest.h>

#include <json.hpp>

#include "evc/algorithms.hpp"
#include "evc/generators.hpp"
#include "evc/reduction.hpp"
#include "oracles.hpp"

using namespace evc;

namespace {

RbdsInstance rbds(std::size_t r, std::size_t b, std::size_t k, std::vector<std::pair<int, int>> edges) {
  RbdsInstance inst;
  for (std::size_t i = 1; i <= r; ++i) inst.reds.push_back("r" + std::to_string(i));
  for (std::size_t j = 1; j <= b; ++j) inst.blues.push_back("b" + std::to_string(j));
  for (auto [i, j] : edges) inst.edges.emplace_back("r" + std::to_string(i), "b" + std::to_string(j));
  inst.k = k;
  return inst;
}

// r1 dominates both blues
RbdsInstance yes_instance() { return rbds(2, 2, 1, {{1, 1}, {1, 2}, {2, 2}}); }
RbdsInstance no_instance() { return rbds(2, 2, 1, {{1, 1}, {2, 2}}); }

bool dominates(const RbdsInstance& inst, const std::vector<std::string>& reds) {
  for (std::size_t j = 1; j <= inst.b(); ++j) {
    bool hit = false;
    for (const auto& red : reds)
      for (const auto& [r, b] : inst.edges) hit = hit || (r == red && b == inst.blues[j - 1]);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST(Rbds, JsonRoundTrip) {
  auto inst = yes_instance();
  auto text = rbds_to_json(inst);
  auto back = parse_rbds_json(text);
  EXPECT_EQ(back.reds, inst.reds);
  EXPECT_EQ(back.edges, inst.edges);
  EXPECT_EQ(back.k, 1u);
  EXPECT_EQ(rbds_digest(back), rbds_digest(inst));
  EXPECT_EQ(rbds_digest(inst).size(), 16u);
  EXPECT_NE(rbds_digest(inst), rbds_digest(no_instance()));
}

TEST(Rbds, MalformedInput) {
  EXPECT_THROW(parse_rbds_json("{"), Error);
  EXPECT_THROW(parse_rbds_json(R"({"reds":["r1"],"blues":["b1"],"edges":[["r1"]],"k":1})"), Error);
  EXPECT_THROW(parse_rbds_json(R"({"reds":["r1"],"blues":["b1"],"edges":[],"k":-1})"), Error);
  EXPECT_THROW(parse_rbds_json(R"({"reds":["x"],"blues":["x"],"edges":[],"k":1})"), Error);
  EXPECT_THROW(parse_rbds_json(R"({"reds":["r1"],"blues":["b1"],"edges":[["b1","r1"]],"k":1})"), Error);
  EXPECT_THROW(parse_rbds_json(R"({"reds":["r1"],"blues":["b1"],"edges":[["r1","b1"],["r1","b1"]],"k":1})"), Error);
}

TEST(Rbds, Preprocessing) {
  EXPECT_EQ(preprocess_rbds(rbds(2, 2, 1, {{1, 1}})).outcome, Preprocessed::trivial_no);
  EXPECT_EQ(preprocess_rbds(rbds(3, 2, 2, {{1, 1}, {2, 2}})).outcome, Preprocessed::trivial_yes);
  EXPECT_EQ(preprocess_rbds(rbds(2, 1, 1, {{2, 1}})).outcome, Preprocessed::trivial_yes);
  EXPECT_EQ(preprocess_rbds(rbds(2, 1, 0, {{2, 1}})).outcome, Preprocessed::trivial_no);
  EXPECT_EQ(preprocess_rbds(rbds(1, 3, 2, {{1, 1}, {1, 2}, {1, 3}})).outcome, Preprocessed::trivial_yes);
  EXPECT_EQ(preprocess_rbds(yes_instance()).outcome, Preprocessed::normalized);
  EXPECT_FALSE(preprocess_rbds(rbds(2, 2, 1, {{1, 1}})).reason.empty());
}

TEST(Rbds, OracleAgreesWithBruteForce) {
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t b = 1; b <= 3; ++b)
      for (std::size_t k = 0; k <= 2; ++k)
        for (const auto& inst : all_rbds(r, b, k)) {
          auto ans = rbds_oracle(inst);
          ASSERT_EQ(ans.yes, oracle::rbds_brute(inst)) << rbds_to_json(inst);
          if (ans.yes) {
            EXPECT_LE(ans.witness.size(), k);
            std::vector<std::string> names;
            for (auto i : ans.witness) names.push_back(inst.reds[i - 1]);
            EXPECT_TRUE(dominates(inst, names));
          }
        }
}

TEST(Reduction, BuildShape) {
  for (auto variant : {Variant::bipartite, Variant::split}) {
    auto inst = yes_instance();
    auto ri = ReducedInstance::build(inst, variant);
    const auto& h = ri.graph();
    std::size_t r = 2, b = 2;
    EXPECT_EQ(ri.ell(), b + 1 + 2);
    EXPECT_EQ(ri.dependents_per_type(), 7u);
    // reds, blues, b typed dependent groups, the star group, star, dagger
    EXPECT_EQ(h.size(), r + b + b * (b * b + 3) + (b * b + 3) + 2);
    EXPECT_EQ(h.id(ri.star()), "star");
    EXPECT_EQ(h.id(ri.dagger()), "dagger");
    EXPECT_EQ(h.id(ri.red(1)), "v1");
    EXPECT_EQ(h.id(ri.blue(2)), "u2");
    EXPECT_EQ(h.id(ri.dependents(1).front()), "w1_1");
    EXPECT_EQ(h.id(ri.star_dependents().back()), "wstar_7");
    EXPECT_EQ(ri.role(ri.dependents(2)[3]), (Role{RoleKind::dependent, 2, 4}));

    std::map<EdgeKind, std::size_t> kinds;
    for (std::size_t i = 0; i < h.edge_count(); ++i) kinds[ri.edge_info(i).kind]++;
    EXPECT_EQ(kinds[EdgeKind::structural], inst.edges.size());
    if (variant == Variant::bipartite) {
      EXPECT_EQ(kinds.count(EdgeKind::clique), 0u);
      EXPECT_TRUE(classify(h).bipartite);
    } else {
      EXPECT_GT(kinds[EdgeKind::clique], 0u);
      EXPECT_TRUE(is_clique(h, ri.core()));
      EXPECT_TRUE(classify(h).split);
    }
    EXPECT_TRUE(is_vertex_cover(h, ri.core()));
  }
  EXPECT_THROW(ReducedInstance::build(rbds(2, 2, 1, {{1, 1}}), Variant::bipartite), Error);
}

TEST(Reduction, VariantNames) {
  EXPECT_EQ(parse_variant("split"), Variant::split);
  EXPECT_EQ(to_string(Variant::bipartite), "bipartite");
  EXPECT_THROW(parse_variant("tripartite"), Error);
}

TEST(Reduction, SidecarRoundTrip) {
  for (auto variant : {Variant::bipartite, Variant::split}) {
    auto ri = ReducedInstance::build(yes_instance(), variant);
    auto text = serialize_graph(ri.graph());
    auto side = ri.sidecar_json();
    auto back = ReducedInstance::from_artifact(text, side);
    EXPECT_EQ(serialize_graph(back.graph()), text);
    EXPECT_EQ(back.sidecar_json(), side);
    EXPECT_EQ(back.variant(), variant);
    EXPECT_EQ(back.ell(), ri.ell());
  }
}

TEST(Reduction, SidecarTamperingIsRejected) {
  auto ri = ReducedInstance::build(yes_instance(), Variant::bipartite);
  auto text = serialize_graph(ri.graph());
  auto side = nlohmann::json::parse(ri.sidecar_json());

  auto with = [&](auto edit) {
    auto copy = side;
    edit(copy);
    return copy.dump();
  };
  EXPECT_THROW(ReducedInstance::from_artifact(text, with([](auto& j) { j["ell"] = 6; })), Error);
  EXPECT_THROW(ReducedInstance::from_artifact(text, with([](auto& j) { j["digest"] = "0000000000000000"; })), Error);
  EXPECT_THROW(ReducedInstance::from_artifact(text, with([](auto& j) { j["source"]["k"] = 0; })), Error);
  EXPECT_THROW(ReducedInstance::from_artifact(text, with([](auto& j) { j["variant"] = "split"; })), Error);
  EXPECT_THROW(ReducedInstance::from_artifact(text, "[]"), Error);
  EXPECT_THROW(ReducedInstance::from_artifact(text, "not json"), Error);
  // drop one edge from the graph file
  auto cut = text.substr(0, text.rfind("e "));
  EXPECT_THROW(ReducedInstance::from_artifact(cut, side.dump()), Error);
}

TEST(Reduction, VerifyInstancePasses) {
  Rng rng(3);
  for (int t = 0; t < 6; ++t) {
    RbdsInstance inst;
    do inst = random_rbds(2 + rng.below(3), 2 + rng.below(2), 1, 0.5, rng);
    while (preprocess_rbds(inst).outcome != Preprocessed::normalized);
    for (auto variant : {Variant::bipartite, Variant::split}) {
      auto rep = verify_instance(ReducedInstance::build(inst, variant));
      EXPECT_TRUE(rep.all_passed());
      EXPECT_FALSE(rep.checks.empty());
      for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
  }
}

TEST(Nice, FamiliesHaveSizeEll) {
  auto inst = rbds(4, 3, 2, {{1, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 3}, {4, 2}});
  for (auto variant : {Variant::bipartite, Variant::split}) {
    auto ri = ReducedInstance::build(inst, variant);
    auto fam = nice_cover_families(ri, {1, 2});
    EXPECT_EQ(fam.support, (std::vector<std::size_t>{1, 2}));
    // one cover per dependent vertex, one per red outside the support
    EXPECT_EQ(fam.dependent.size(), 3u * 12u);
    EXPECT_EQ(fam.dependent_star.size(), 12u);
    EXPECT_EQ(fam.red.size(), 2u);
    for (const auto& nc : fam.all()) {
      Config c = nc.materialize(ri);
      EXPECT_EQ(c.size(), ri.ell()) << nc.label(ri);
      EXPECT_TRUE(is_vertex_cover(ri.graph(), c)) << nc.label(ri);
      EXPECT_TRUE(ri.core().is_subset_of(c));
      auto back = classify_cover(ri, c, fam.support);
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, nc);
    }
    EXPECT_EQ(fam.backup.label(ri), "Backup");
    EXPECT_EQ(fam.red.front().label(ri), "Red(3)");
  }
}

TEST(Nice, SupportPadding) {
  auto ri = ReducedInstance::build(rbds(4, 3, 2, {{1, 1}, {1, 2}, {1, 3}, {2, 1}}), Variant::bipartite);
  EXPECT_EQ(nice_support(ri, {1}), (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(nice_support(ri, {2}), Error);
  EXPECT_THROW(nice_support(ri, {1, 2, 3}), Error);
}

TEST(Nice, ClassifyRejectsOtherConfigs) {
  auto ri = ReducedInstance::build(yes_instance(), Variant::bipartite);
  auto fam = nice_cover_families(ri, {1});
  Config c = fam.backup.materialize(ri);
  c.erase(ri.star());
  c.insert(ri.dependents(1).front());
  EXPECT_FALSE(classify_cover(ri, c, fam.support));
  EXPECT_FALSE(classify_cover(ri, ri.graph().empty_set()));
}

TEST(Nice, BridgeAttackOnBackupIsAnExchange) {
  for (auto variant : {Variant::bipartite, Variant::split}) {
    auto ri = ReducedInstance::build(yes_instance(), variant);
    const auto& h = ri.graph();
    auto fam = nice_cover_families(ri, {1});
    std::size_t bridges = 0;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      if (ri.edge_info(i).kind != EdgeKind::bridge) continue;
      ++bridges;
      auto e = h.edges()[i];
      auto d = defend_nice(ri, fam.backup, e);
      EXPECT_EQ(d.next.kind, NiceKind::backup);
      EXPECT_EQ(d.next.label(ri), "Backup");
      EXPECT_EQ(d.rule, 4);
      auto moves = d.plan.moving();
      ASSERT_EQ(moves.size(), 2u);
      EXPECT_EQ(make_edge(moves[0].from, moves[0].to), make_edge(ri.star(), ri.dagger()));
      EXPECT_EQ(make_edge(moves[1].from, moves[1].to), make_edge(ri.star(), ri.dagger()));
    }
    EXPECT_EQ(bridges, 1u);
  }
}

TEST(Nice, DefenceErrors) {
  auto ri = ReducedInstance::build(yes_instance(), Variant::bipartite);
  auto fam = nice_cover_families(ri, {1});
  EXPECT_THROW(defend_nice(ri, fam.backup, make_edge(ri.red(1), ri.red(2))), Error);
  NiceCover bogus = fam.backup;
  bogus.dom = {2};
  EXPECT_THROW(defend_nice(ri, bogus, ri.graph().edges().front()), Error);
}

TEST(Nice, DefenderEndures) {
  Rng rng(71);
  for (int t = 0; t < 6; ++t) {
    RbdsInstance inst;
    RbdsAnswer ans;
    do {
      inst = random_rbds(2 + rng.below(4), 2 + rng.below(2), 1 + rng.below(2), 0.5, rng);
      if (preprocess_rbds(inst).outcome != Preprocessed::normalized) continue;
      ans = rbds_oracle(inst);
    } while (preprocess_rbds(inst).outcome != Preprocessed::normalized || !ans.yes);
    for (auto variant : {Variant::bipartite, Variant::split}) {
      auto ri = ReducedInstance::build(inst, variant);
      NiceDefender d(ri, ans.witness);
      RandomAttacker a(ri.graph(), 1000 + t);
      auto res = simulate(ri.graph(), ri.ell(), d, a, 2000);
      EXPECT_TRUE(res.survived) << rbds_to_json(inst);
      EXPECT_EQ(d.annotate(res.trace.front().config), "Backup");
    }
  }
}

TEST(Extraction, YesInstanceYieldsADominatingSet) {
  auto inst = yes_instance();
  auto ri = ReducedInstance::build(inst, Variant::bipartite);
  auto s = safe_set(ri.graph(), ri.ell());
  ASSERT_FALSE(s.empty());
  auto dom = extract_dominating_set(ri, s);
  EXPECT_LE(dom.size(), inst.k);
  EXPECT_TRUE(dominates(inst, dom));
}

TEST(Extraction, NoInstanceHasNoSafeSetAtEll) {
  auto inst = no_instance();
  ASSERT_EQ(preprocess_rbds(inst).outcome, Preprocessed::normalized);
  ASSERT_FALSE(rbds_oracle(inst).yes);
  auto ri = ReducedInstance::build(inst, Variant::bipartite);
  auto s = safe_set(ri.graph(), ri.ell());
  EXPECT_TRUE(s.empty());
  EXPECT_THROW(extract_dominating_set(ri, s), Error);
}
