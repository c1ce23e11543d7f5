#include "epacker/certificate.hpp"

#include <algorithm>

namespace epk {

using nlohmann::json;

namespace {

json labels_of(const Graph& g, const VertexSet& s) {
    json out = json::array();
    for (int v : s) out.push_back(g.label_of(v));
    return out;
}

VertexSet ids_from_labels(const Graph& g, const json& arr) {
    VertexSet out;
    for (const auto& l : arr) out.push_back(g.vertex_with_label(l.get<int>()));
    std::sort(out.begin(), out.end());
    return out;
}

json model_to_json(const Graph& g, const MinorModel& model) {
    json sets = json::array();
    for (const auto& bs : model.branch_sets) sets.push_back(labels_of(g, bs));
    return sets;
}

MinorModel model_from_json(const Graph& g, const json& sets) {
    MinorModel model;
    for (const auto& bs : sets) model.branch_sets.push_back(ids_from_labels(g, bs));
    return model;
}

json trace_to_json(const Graph& g, const std::vector<TraceStep>& trace) {
    json out = json::array();
    for (const auto& step : trace) {
        json bags = json::array();
        for (const auto& b : step.bags) bags.push_back(labels_of(g, b));
        out.push_back({{"level", step.level},
                       {"Y", labels_of(g, step.region)},
                       {"bags", bags},
                       {"l", step.prefix_len},
                       {"i_prime", step.tree_index}});
    }
    return out;
}

long long pow3(int exponent) {
    long long out = 1;
    for (int i = 0; i < exponent; ++i) out *= 3;
    return out;
}

} // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(json::array({g.label_of(u), g.label_of(v)}));
    return {{"n", g.vertex_count()}, {"edges", edges}, {"labels", g.labels()}};
}

Graph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<int> labels = j.at("labels").get<std::vector<int>>();
    if (static_cast<int>(labels.size()) != n) throw parse_error("certificate graph: bad labels");
    std::vector<int> id_of_label_sorted(labels);
    Graph skeleton(n, {}, labels);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw parse_error("certificate graph: bad edge");
        edges.emplace_back(skeleton.vertex_with_label(e[0].get<int>()),
                           skeleton.vertex_with_label(e[1].get<int>()));
    }
    return Graph(n, std::move(edges), std::move(labels));
}

json build_solve_certificate(const std::string& kind, const Instance& instance,
                             const Outcome& outcome, double solve_ms) {
    const Graph& g = instance.graph();
    json trees = json::array();
    for (const auto& t : instance.trees()) trees.push_back(graph_to_json(t.graph()));
    json doc = {{"schema_version", kCertificateSchemaVersion},
                {"kind", kind},
                {"instance",
                 {{"graph", graph_to_json(g)}, {"trees", trees}, {"x", instance.multiplicities()}}},
                {"trace", trace_to_json(g, outcome.trace)},
                {"bound", outcome.bound},
                {"timings", {{"solve_ms", solve_ms}}}};
    if (outcome.is_packing()) {
        doc["outcome"] = "packing";
        json models = json::array();
        for (const auto& m : outcome.packing().models)
            models.push_back({{"tree", m.tree_index},
                              {"copy", m.copy_index},
                              {"host", labels_of(g, m.host)},
                              {"branch_sets", model_to_json(g, m.model)}});
        doc["models"] = models;
    } else {
        doc["outcome"] = "cover";
        doc["cover"] = {{"X", labels_of(g, outcome.cover().vertices)},
                        {"witness", outcome.cover().witness}};
    }
    return doc;
}

json build_pathwidth_certificate(const Graph& g, int p, int k, const PwOutcome& outcome,
                                 double solve_ms) {
    json doc = {{"schema_version", kCertificateSchemaVersion},
                {"kind", "pathwidth"},
                {"instance", {{"graph", graph_to_json(g)}, {"p", p}, {"k", k}}},
                {"trace", trace_to_json(g, outcome.phase1.trace)},
                {"bound", outcome.bound},
                {"timings", {{"solve_ms", solve_ms}}}};
    if (outcome.packed) {
        doc["outcome"] = "pw-packing";
        json subs = json::array();
        for (const auto& s : outcome.subgraphs) subs.push_back(labels_of(g, s));
        doc["subgraphs"] = subs;
    } else {
        doc["outcome"] = "pw-cover";
        doc["cover"] = {{"X", labels_of(g, outcome.cover)}};
        doc["X1"] = labels_of(g, outcome.cover_phase1);
        doc["X2"] = labels_of(g, outcome.cover_phase2);
        doc["bags_selected"] = outcome.stab_bags;
    }
    return doc;
}

json build_oracle_packing_certificate(const Graph& g, const Tree& tree,
                                      const MaxPackingResult& result, double solve_ms) {
    json models = json::array();
    for (const auto& m : result.models) models.push_back(model_to_json(g, m));
    return {{"schema_version", kCertificateSchemaVersion},
            {"kind", "oracle"},
            {"instance",
             {{"graph", graph_to_json(g)}, {"tree", graph_to_json(tree.graph())},
              {"what", "packing"}}},
            {"outcome", "oracle"},
            {"value", result.nu},
            {"witness_models", models},
            {"timings", {{"solve_ms", solve_ms}}}};
}

json build_oracle_hitting_certificate(const Graph& g, const Tree& tree,
                                      const MinHittingResult& result, double solve_ms) {
    return {{"schema_version", kCertificateSchemaVersion},
            {"kind", "oracle"},
            {"instance",
             {{"graph", graph_to_json(g)}, {"tree", graph_to_json(tree.graph())},
              {"what", "hitting"}}},
            {"outcome", "oracle"},
            {"value", result.tau},
            {"witness", labels_of(g, result.witness)},
            {"timings", {{"solve_ms", solve_ms}}}};
}

json build_oracle_pathwidth_certificate(const Graph& g, int width, double solve_ms) {
    return {{"schema_version", kCertificateSchemaVersion},
            {"kind", "oracle"},
            {"instance", {{"graph", graph_to_json(g)}, {"what", "pathwidth"}}},
            {"outcome", "oracle"},
            {"value", width},
            {"timings", {{"solve_ms", solve_ms}}}};
}

namespace {

bool same_labeled_graph(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    std::vector<int> la = a.labels(), lb = b.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return false;
    auto edge_labels = [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (auto [u, v] : g.edges()) {
            int x = g.label_of(u), y = g.label_of(v);
            out.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return edge_labels(a) == edge_labels(b);
}

CertificateCheck check_solve_certificate(const Graph& g, const json& cert,
                                         const SolveOptions& options) {
    CertificateCheck check;
    auto flag = [&](const std::string& msg) {
        check.ok = false;
        check.violations.push_back(msg);
    };
    std::vector<Tree> trees;
    for (const auto& tj : cert.at("instance").at("trees")) trees.emplace_back(graph_from_json(tj));
    std::vector<int> x = cert.at("instance").at("x").get<std::vector<int>>();
    Instance instance(g, std::move(trees), std::move(x));

    Outcome outcome;
    outcome.bound = cert.at("bound").get<long long>();
    std::string kind = cert.at("outcome").get<std::string>();
    if (kind == "packing") {
        Packing packing;
        for (const auto& mj : cert.at("models")) {
            PackedModel m;
            m.tree_index = mj.at("tree").get<int>();
            m.copy_index = mj.at("copy").get<int>();
            m.host = ids_from_labels(g, mj.at("host"));
            m.model = model_from_json(g, mj.at("branch_sets"));
            packing.models.push_back(std::move(m));
        }
        outcome.result = std::move(packing);
    } else if (kind == "cover") {
        Cover cover;
        cover.vertices = ids_from_labels(g, cert.at("cover").at("X"));
        cover.witness = cert.at("cover").at("witness").get<int>();
        outcome.result = std::move(cover);
    } else {
        flag("unknown outcome \"" + kind + "\"");
        return check;
    }
    auto validation = verify_outcome(instance, outcome, options);
    if (!validation.ok) {
        check.ok = false;
        for (auto& v : validation.violations) check.violations.push_back(std::move(v));
    }
    return check;
}

CertificateCheck check_pathwidth_certificate(const Graph& g, const json& cert,
                                             const SolveOptions& options) {
    CertificateCheck check;
    auto flag = [&](const std::string& msg) {
        check.ok = false;
        check.violations.push_back(msg);
    };
    int p = cert.at("instance").at("p").get<int>();
    int k = cert.at("instance").at("k").get<int>();
    if (p < 1 || k < 1) {
        flag("pathwidth certificate needs p >= 1 and k >= 1");
        return check;
    }
    long long bound = pw_cover_bound(p, k);
    if (cert.at("bound").get<long long>() != bound)
        flag("stated bound " + std::to_string(cert.at("bound").get<long long>()) +
             " differs from recomputed " + std::to_string(bound));
    std::string kind = cert.at("outcome").get<std::string>();
    if (kind == "pw-packing") {
        std::vector<VertexSet> subs;
        for (const auto& sj : cert.at("subgraphs")) subs.push_back(ids_from_labels(g, sj));
        if (static_cast<int>(subs.size()) != k)
            flag("pw-packing has " + std::to_string(subs.size()) + " subgraphs, expected " +
                 std::to_string(k));
        for (size_t a = 0; a < subs.size(); ++a)
            for (size_t b = a + 1; b < subs.size(); ++b)
                if (!set_intersection(subs[a], subs[b]).empty())
                    flag("subgraphs " + std::to_string(a) + " and " + std::to_string(b) +
                         " overlap");
        for (size_t a = 0; a < subs.size(); ++a)
            if (pathwidth_exact(induced_subgraph(g, subs[a]), options.decomposition).width < p)
                flag("subgraph " + std::to_string(a) + " has pathwidth below " +
                     std::to_string(p));
    } else if (kind == "pw-cover") {
        VertexSet x = ids_from_labels(g, cert.at("cover").at("X"));
        VertexSet x1 = ids_from_labels(g, cert.at("X1"));
        VertexSet x2 = ids_from_labels(g, cert.at("X2"));
        if (set_union(x1, x2) != x) flag("X differs from X1 union X2");
        if (static_cast<long long>(x.size()) > bound)
            flag("cover has " + std::to_string(x.size()) + " vertices, bound is " +
                 std::to_string(bound));
        long long phase_bound = pow3(p + 1) * (k - 1);
        if (static_cast<long long>(x1.size()) > phase_bound) flag("X1 exceeds 3^(p+1)(k-1)");
        if (static_cast<long long>(x2.size()) > phase_bound) flag("X2 exceeds 3^(p+1)(k-1)");
        if (pathwidth_exact(remove_vertices(g, x), options.decomposition).width >= p)
            flag("graph minus cover still has pathwidth >= " + std::to_string(p));
    } else {
        flag("unknown outcome \"" + kind + "\"");
    }
    return check;
}

CertificateCheck check_oracle_certificate(const Graph& g, const json& cert,
                                          const SolveOptions& options) {
    (void)options;
    CertificateCheck check;
    auto flag = [&](const std::string& msg) {
        check.ok = false;
        check.violations.push_back(msg);
    };
    std::string what = cert.at("instance").at("what").get<std::string>();
    OracleLimits limits;
    limits.max_vertices = std::max(limits.max_vertices, g.vertex_count());
    if (what == "pathwidth") {
        int stated = cert.at("value").get<int>();
        int actual = pathwidth_reference(g, limits);
        if (stated != actual)
            flag("stated pathwidth " + std::to_string(stated) + ", recomputed " +
                 std::to_string(actual));
        return check;
    }
    Tree tree(graph_from_json(cert.at("instance").at("tree")));
    if (what == "packing") {
        auto actual = max_packing_bruteforce(g, tree, limits);
        int stated = cert.at("value").get<int>();
        if (stated != actual.nu)
            flag("stated packing number " + std::to_string(stated) + ", recomputed " +
                 std::to_string(actual.nu));
        std::vector<MinorModel> witnesses;
        for (const auto& mj : cert.at("witness_models"))
            witnesses.push_back(model_from_json(g, mj));
        if (static_cast<int>(witnesses.size()) != stated)
            flag("witness family size differs from the stated packing number");
        for (const auto& m : witnesses) {
            auto mv = validate_model(g, tree, m);
            for (const auto& v : mv.violations) flag("witness model: " + v);
        }
        for (size_t a = 0; a < witnesses.size(); ++a)
            for (size_t b = a + 1; b < witnesses.size(); ++b) {
                VertexSet ua, ub;
                for (const auto& s : witnesses[a].branch_sets) ua = set_union(ua, s);
                for (const auto& s : witnesses[b].branch_sets) ub = set_union(ub, s);
                if (!set_intersection(ua, ub).empty()) flag("witness models overlap");
            }
    } else if (what == "hitting") {
        auto actual = min_hitting_bruteforce(g, tree, limits);
        int stated = cert.at("value").get<int>();
        if (stated != actual.tau)
            flag("stated hitting number " + std::to_string(stated) + ", recomputed " +
                 std::to_string(actual.tau));
        VertexSet witness = ids_from_labels(g, cert.at("witness"));
        if (static_cast<int>(witness.size()) != stated)
            flag("witness size differs from the stated hitting number");
        if (has_minor_bruteforce(remove_vertices(g, witness), tree, limits))
            flag("witness fails to hit every model");
    } else {
        flag("unknown oracle query \"" + what + "\"");
    }
    return check;
}

} // namespace

CertificateCheck verify_certificate(const Graph& user_graph, const json& certificate,
                                    const SolveOptions& options) {
    CertificateCheck check;
    auto flag = [&](const std::string& msg) {
        check.ok = false;
        check.violations.push_back(msg);
    };
    try {
        if (certificate.at("schema_version").get<std::string>() != kCertificateSchemaVersion) {
            flag("unsupported schema version");
            return check;
        }
        Graph cert_graph = graph_from_json(certificate.at("instance").at("graph"));
        if (!same_labeled_graph(cert_graph, user_graph)) {
            flag("certificate was produced for a different graph");
            return check;
        }
        std::string kind = certificate.at("kind").get<std::string>();
        if (kind == "tree" || kind == "forest")
            return check_solve_certificate(user_graph, certificate, options);
        if (kind == "pathwidth")
            return check_pathwidth_certificate(user_graph, certificate, options);
        if (kind == "oracle") return check_oracle_certificate(user_graph, certificate, options);
        flag("unknown certificate kind \"" + kind + "\"");
        return check;
    } catch (const capacity_error&) {
        throw;
    } catch (const json::exception& e) {
        flag(std::string("malformed certificate: ") + e.what());
        return check;
    } catch (const domain_error& e) {
        flag(std::string("inconsistent certificate: ") + e.what());
        return check;
    } catch (const parse_error& e) {
        flag(std::string("inconsistent certificate: ") + e.what());
        return check;
    }
}

} // namespace epk
