#include "fszlab/report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fszlab {

using ordered_json = nlohmann::ordered_json;

Command command_from_name(const std::string& name) {
    if (name == "fsz") return Command::Fsz;
    if (name == "fsz-plus") return Command::FszPlus;
    if (name == "indicators") return Command::Indicators;
    if (name == "zeta") return Command::Zeta;
    if (name == "catalog") return Command::Catalog;
    if (name == "verify-properties") return Command::VerifyProperties;
    throw std::invalid_argument("unknown command: " + name);
}

std::string command_name(Command c) {
    switch (c) {
        case Command::Fsz: return "fsz";
        case Command::FszPlus: return "fsz-plus";
        case Command::Indicators: return "indicators";
        case Command::Zeta: return "zeta";
        case Command::Catalog: return "catalog";
        case Command::VerifyProperties: return "verify-properties";
    }
    return "?";
}

namespace {

Group build_configured_group(const RunConfig& config) {
    int sources = (config.family ? 1 : 0) + (config.file ? 1 : 0) + (config.psl2_q ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument("exactly one group source (--family or --file) is required");
    if (config.psl2_q) return build_psl2(*config.psl2_q);
    if (config.family) return build_family(*config.family);
    return load_group(*config.file);
}

std::vector<int64_t> resolve_degrees(const Group& g, const RunConfig& config) {
    if (config.degrees == "auto")
        return relevant_degrees(g, config.no_reductions ? DegreeMode::Full : DegreeMode::Reduced);
    std::vector<int64_t> out;
    std::stringstream ss(config.degrees);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t used = 0;
        int64_t v = std::stoll(tok, &used);
        if (used != tok.size() || v <= 0)
            throw std::invalid_argument("bad degree '" + tok + "' (positive integers expected)");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty degree list");
    std::set<int64_t> uniq(out.begin(), out.end());
    return {uniq.begin(), uniq.end()};
}

std::string classify_name(CycKind k) {
    switch (k) {
        case CycKind::Integer: return "integer";
        case CycKind::RationalNonInteger: return "rational-non-integer";
        case CycKind::Irrational: return "irrational";
    }
    return "?";
}

void run_fsz(const Group& g, const RunConfig& config, ReportDocument& doc, bool plus) {
    FszOptions opts;
    opts.fail_fast = config.fail_fast;
    opts.workers = config.workers;
    opts.degree_mode = config.no_reductions ? DegreeMode::Full : DegreeMode::Reduced;
    if (config.degrees != "auto") opts.degrees = resolve_degrees(g, config);
    FszVerdict v = is_fsz(g, plus, opts);
    doc.degrees = v.degrees_tested;
    doc.failed = !v.pass;
    doc.verdict = std::move(v);
}

void run_indicators(const Group& g, const RunConfig& config, ReportDocument& doc) {
    std::vector<int64_t> degrees = resolve_degrees(g, config);
    doc.degrees = degrees;
    const auto& classes = g.conjugacy_classes();
    const PowerClassPartition& partition = g.rational_power_classes();
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        ElementId u = classes[ci].representative;
        const std::vector<ElementId>& cent = g.class_centralizer(static_cast<int>(ci));
        Group c = g.subgroup(cent);
        for (int64_t n : degrees) {
            if (c.is_abelian()) {
                for (const LabeledIndicator& li : abelian_centralizer_indicators(g, u, n)) {
                    IndicatorEntry e;
                    e.u_class = static_cast<int>(ci);
                    e.n = n;
                    e.kind = "abelian-centralizer";
                    e.label = "eta=" + li.eta_label;
                    e.value = li.value.to_string();
                    e.classification = classify_name(li.value.classify());
                    doc.indicators.push_back(std::move(e));
                }
            } else {
                // cyclic restrictions: one row per generator-block leader in
                // C(u) and each character of <g>
                std::set<int32_t> leaders;
                for (const ElementId& x : cent)
                    leaders.insert(partition.blocks[static_cast<size_t>(
                                                        partition.block_of[static_cast<size_t>(x.value())])]
                                       .leader.value());
                for (int32_t lv : leaders) {
                    ElementId leader(lv);
                    int64_t o = g.element_order(leader);
                    for (int64_t j = 0; j < o; ++j) {
                        CycNum val = cyclic_restriction_indicator(g, u, leader, n, j);
                        IndicatorEntry e;
                        e.u_class = static_cast<int>(ci);
                        e.n = n;
                        e.kind = "cyclic-restriction";
                        e.label = "g=" + std::to_string(lv) + ",j=" + std::to_string(j);
                        e.value = val.to_string();
                        e.classification = classify_name(val.classify());
                        doc.indicators.push_back(std::move(e));
                    }
                }
            }
        }
    }
}

void run_zeta(const Group& g, const RunConfig& config, ReportDocument& doc) {
    std::vector<int64_t> degrees = resolve_degrees(g, config);
    doc.degrees = degrees;
    const auto& classes = g.conjugacy_classes();
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        for (int64_t n : degrees) {
            ZetaTable table = zeta_table(g, classes[ci].representative, n);
            for (const ElementId& s : table.support) {
                int64_t c = table.count(s);
                if (c == 0) continue;
                doc.zeta.push_back(ZetaEntry{static_cast<int>(ci), n, s, c});
            }
        }
    }
}

void run_catalog(const Group& g, ReportDocument& doc) {
    const auto& classes = g.conjugacy_classes();
    doc.catalog_rows.emplace_back("backend", g.backend());
    doc.catalog_rows.emplace_back("order", std::to_string(g.order()));
    doc.catalog_rows.emplace_back("exponent", std::to_string(g.exponent()));
    doc.catalog_rows.emplace_back("abelian", g.is_abelian() ? "yes" : "no");
    doc.catalog_rows.emplace_back("class_count", std::to_string(classes.size()));
    std::vector<int64_t> reduced = relevant_degrees(g, DegreeMode::Reduced);
    std::string degs;
    for (size_t i = 0; i < reduced.size(); ++i) {
        if (i) degs += ",";
        degs += std::to_string(reduced[i]);
    }
    doc.catalog_rows.emplace_back("degrees_to_test", degs.empty() ? "(none: automatic)" : degs);
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        std::ostringstream val;
        val << "rep=" << g.element_repr(classes[ci].representative)
            << " order=" << g.element_order(classes[ci].representative)
            << " size=" << classes[ci].size;
        doc.catalog_rows.emplace_back("class_" + std::to_string(ci), val.str());
    }
}

void run_verify_properties(const Group& g, const RunConfig& config, ReportDocument& doc) {
    std::mt19937_64 rng(config.seed);
    int64_t order = g.order();
    auto random_elt = [&]() { return ElementId(static_cast<int32_t>(rng() % static_cast<uint64_t>(order))); };
    int64_t e = g.exponent();
    std::vector<int64_t> degree_pool = divisors_of(e);
    for (int64_t extra : {e + 1, 2 * e, int64_t{8}}) degree_pool.push_back(extra);
    auto random_degree = [&]() {
        return degree_pool[static_cast<size_t>(rng() % degree_pool.size())];
    };

    int64_t trials = 256;

    {  // inversion symmetry: zeta_n(g) = zeta_n(g^{-1})
        PropertyResult r{"inversion-symmetry", 0, 0};
        for (int64_t t = 0; t < trials; ++t) {
            ElementId u = random_elt(), x = random_elt();
            int64_t n = random_degree();
            ++r.instances;
            if (count_gn(g, u, x, n) != count_gn(g, u, g.inverse(x), n)) ++r.failures;
        }
        doc.properties.push_back(r);
    }
    {  // conjugation equivariance
        PropertyResult r{"conjugation-equivariance", 0, 0};
        for (int64_t t = 0; t < trials; ++t) {
            ElementId u = random_elt(), x = random_elt(), by = random_elt();
            int64_t n = random_degree();
            ++r.instances;
            if (count_gn(g, u, x, n) !=
                count_gn(g, g.conjugate(u, by), g.conjugate(x, by), n))
                ++r.failures;
        }
        doc.properties.push_back(r);
    }
    {  // Galois set identity G_n(u) = G_{gcd(n,e)}(u)
        PropertyResult r{"galois-set-identity", 0, 0};
        for (int64_t t = 0; t < 32; ++t) {
            ElementId u = random_elt();
            int64_t n = random_degree();
            int64_t d = std::gcd(n, e);
            auto pn = g.power_data(n);
            auto pdd = g.power_data(d);
            ElementId uinv = g.inverse(u);
            bool ok = true;
            for (int32_t a = 0; a < order && ok; ++a) {
                int32_t au = g.multiply(ElementId(a), uinv).value();
                bool in_n = pn->pow[static_cast<size_t>(a)] == pn->pow[static_cast<size_t>(au)];
                bool in_d = pdd->pow[static_cast<size_t>(a)] == pdd->pow[static_cast<size_t>(au)];
                if (in_n != in_d) ok = false;
            }
            ++r.instances;
            if (!ok) ++r.failures;
        }
        doc.properties.push_back(r);
    }
    {  // power-map bijections for m = +-1 mod n
        PropertyResult r{"power-map-bijection", 0, 0};
        for (int64_t t = 0; t < trials; ++t) {
            ElementId u = random_elt();
            std::vector<ElementId> cent = g.centralizer(u);
            ElementId x = cent[static_cast<size_t>(rng() % cent.size())];
            int64_t n = random_degree();
            // m = 1 + k*n or -1 + k*n, adjusted until coprime to |G|
            int64_t m = 0;
            bool found = false;
            for (int64_t k = 0; k < 4 * order + 4 && !found; ++k) {
                int64_t cand = (rng() % 2 == 0 ? 1 : -1) + static_cast<int64_t>(rng() % 64) * n;
                if (std::gcd(((cand % order) + order) % order, order) == 1) {
                    m = cand;
                    found = true;
                }
            }
            if (!found) continue;
            ++r.instances;
            if (!coprime_power_bijection_check(g, u, x, n, m)) ++r.failures;
        }
        doc.properties.push_back(r);
    }
    {  // direct-product multiplicativity against a fixed small factor
        PropertyResult r{"direct-product-multiplicativity", 0, 0};
        Group other = build_symmetric(3);
        Group prod = Group::direct_product(g, other);
        for (int64_t t = 0; t < 64; ++t) {
            ElementId u1 = random_elt(), x1 = random_elt();
            ElementId u2(static_cast<int32_t>(rng() % 6)), x2(static_cast<int32_t>(rng() % 6));
            int64_t n = random_degree();
            ++r.instances;
            int64_t lhs = count_gn(prod, prod.product_id(u1, u2), prod.product_id(x1, x2), n);
            int64_t rhs = count_gn(g, u1, x1, n) * count_gn(other, u2, x2, n);
            if (lhs != rhs) ++r.failures;
        }
        doc.properties.push_back(r);
    }
    for (const PropertyResult& r : doc.properties)
        if (r.failures > 0) doc.failed = true;
}

}  // namespace

ReportDocument run(const RunConfig& config) {
    auto start = std::chrono::steady_clock::now();
    Group g = build_configured_group(config);
    ReportDocument doc;
    doc.command = command_name(config.command);
    doc.group_name = g.name();
    doc.order = g.order();
    doc.exponent = g.exponent();
    doc.class_count = static_cast<int64_t>(g.conjugacy_classes().size());

    switch (config.command) {
        case Command::Fsz:
            run_fsz(g, config, doc, config.plus);
            break;
        case Command::FszPlus:
            run_fsz(g, config, doc, true);
            break;
        case Command::Indicators:
            run_indicators(g, config, doc);
            break;
        case Command::Zeta:
            run_zeta(g, config, doc);
            break;
        case Command::Catalog:
            run_catalog(g, doc);
            break;
        case Command::VerifyProperties:
            run_verify_properties(g, config, doc);
            break;
    }
    doc.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return doc;
}

namespace {

ordered_json witness_json(const FszWitness& w, int64_t n) {
    ordered_json j;
    j["n"] = n;
    j["u_class"] = w.u_class;
    j["u_order"] = w.u_order;
    j["u_class_size"] = w.u_class_size;
    j["g"] = w.g.value();
    j["g_order"] = w.g_order;
    j["m"] = w.m;
    j["g_m"] = w.g_m.value();
    j["count_g"] = w.count_g;
    j["count_gm"] = w.count_g_m;
    if (w.ambient_class >= 0) j["ambient_class"] = w.ambient_class;
    return j;
}

std::string render_json(const ReportDocument& doc) {
    ordered_json j;
    j["group"] = {{"name", doc.group_name},
                  {"order", doc.order},
                  {"exponent", doc.exponent},
                  {"class_count", doc.class_count}};
    j["command"] = doc.command;
    j["degrees"] = doc.degrees;
    ordered_json verdicts = ordered_json::object();
    ordered_json witnesses = ordered_json::array();
    if (doc.verdict) {
        std::map<int64_t, bool> per_degree;
        for (const DegreeVerdict& dv : doc.verdict->results) {
            auto [it, fresh] = per_degree.emplace(dv.n, dv.pass);
            if (!fresh) it->second = it->second && dv.pass;
            for (const FszWitness& w : dv.witnesses) witnesses.push_back(witness_json(w, dv.n));
        }
        for (const auto& [n, pass] : per_degree)
            verdicts[std::to_string(n)] = pass ? "pass" : "fail";
        j["plus"] = doc.verdict->plus_mode;
        j["pass"] = doc.verdict->pass;
        ordered_json entries = ordered_json::array();
        for (const DegreeVerdict& dv : doc.verdict->results) {
            ordered_json e;
            e["n"] = dv.n;
            e["pass"] = dv.pass;
            e["method"] =
                dv.method == DegreeMethod::Counted ? "counted" : "order-certificate";
            if (dv.ambient_class >= 0) {
                e["ambient_class"] = dv.ambient_class;
                e["subgroup_order"] = dv.subgroup_order;
            }
            entries.push_back(std::move(e));
        }
        j["entries"] = std::move(entries);
    }
    j["verdicts"] = std::move(verdicts);
    j["witnesses"] = std::move(witnesses);
    ordered_json indicators = ordered_json::array();
    for (const IndicatorEntry& e : doc.indicators) {
        indicators.push_back({{"u_class", e.u_class},
                              {"n", e.n},
                              {"kind", e.kind},
                              {"label", e.label},
                              {"value", e.value},
                              {"classification", e.classification}});
    }
    j["indicators"] = std::move(indicators);
    if (!doc.zeta.empty()) {
        ordered_json zeta = ordered_json::array();
        for (const ZetaEntry& e : doc.zeta)
            zeta.push_back({{"u_class", e.u_class}, {"n", e.n}, {"g", e.g.value()}, {"count", e.count}});
        j["zeta"] = std::move(zeta);
    }
    if (!doc.properties.empty()) {
        ordered_json props = ordered_json::array();
        for (const PropertyResult& p : doc.properties)
            props.push_back({{"property", p.name},
                             {"instances", p.instances},
                             {"failures", p.failures},
                             {"pass", p.failures == 0}});
        j["properties"] = std::move(props);
    }
    if (!doc.catalog_rows.empty()) {
        ordered_json cat = ordered_json::object();
        for (const auto& [k, v] : doc.catalog_rows) cat[k] = v;
        j["catalog"] = std::move(cat);
    }
    j["pass"] = !doc.failed;
    j["timing"] = {{"elapsed_ms", doc.elapsed_ms}};
    return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string render_csv(const ReportDocument& doc) {
    std::ostringstream out;
    if (doc.verdict) {
        out << "kind,n,verdict,method,ambient_class,u_class,u_order,u_class_size,g,g_order,m,"
               "count_g,count_gm\n";
        for (const DegreeVerdict& dv : doc.verdict->results) {
            out << "verdict," << dv.n << "," << (dv.pass ? "pass" : "fail") << ","
                << (dv.method == DegreeMethod::Counted ? "counted" : "order-certificate") << ","
                << dv.ambient_class << ",,,,,,,,\n";
            for (const FszWitness& w : dv.witnesses) {
                out << "witness," << dv.n << ",fail,counted," << w.ambient_class << ","
                    << w.u_class << "," << w.u_order << "," << w.u_class_size << ","
                    << w.g.value() << "," << w.g_order << "," << w.m << "," << w.count_g << ","
                    << w.count_g_m << "\n";
            }
        }
        return out.str();
    }
    if (!doc.indicators.empty()) {
        out << "u_class,n,kind,label,value,classification\n";
        for (const IndicatorEntry& e : doc.indicators)
            out << e.u_class << "," << e.n << "," << e.kind << "," << csv_escape(e.label) << ","
                << csv_escape(e.value) << "," << e.classification << "\n";
        return out.str();
    }
    if (!doc.zeta.empty()) {
        out << "u_class,n,g,count\n";
        for (const ZetaEntry& e : doc.zeta)
            out << e.u_class << "," << e.n << "," << e.g.value() << "," << e.count << "\n";
        return out.str();
    }
    if (!doc.properties.empty()) {
        out << "property,instances,failures,pass\n";
        for (const PropertyResult& p : doc.properties)
            out << p.name << "," << p.instances << "," << p.failures << ","
                << (p.failures == 0 ? "pass" : "fail") << "\n";
        return out.str();
    }
    out << "key,value\n";
    for (const auto& [k, v] : doc.catalog_rows) out << csv_escape(k) << "," << csv_escape(v) << "\n";
    return out.str();
}

std::string render_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "group " << doc.group_name << ": order " << doc.order << ", exponent " << doc.exponent
        << ", " << doc.class_count << " conjugacy classes\n";
    out << "command: " << doc.command << "\n";
    if (!doc.degrees.empty()) {
        out << "degrees:";
        for (int64_t n : doc.degrees) out << " " << n;
        out << "\n";
    }
    if (doc.verdict) {
        const FszVerdict& v = *doc.verdict;
        if (v.results.empty())
            out << "  no degrees need counting (exponent " << v.exponent
                << " resolves by the automatic reductions)\n";
        for (const DegreeVerdict& dv : v.results) {
            out << "  n=" << dv.n;
            if (dv.ambient_class >= 0)
                out << " [centralizer of class " << dv.ambient_class << ", order "
                    << dv.subgroup_order << "]";
            if (dv.method == DegreeMethod::OrderCertificate)
                out << "  certified by element orders";
            out << (dv.pass ? "  OK - Integers" : "  !!! N O N - I N T E G E R !!!") << "\n";
            for (const FszWitness& w : dv.witnesses) {
                out << "    witness: u_class=" << w.u_class << " (order " << w.u_order << ", size "
                    << w.u_class_size << ") g=" << w.g.value() << " (order " << w.g_order
                    << ") m=" << w.m << ": count(g)=" << w.count_g << " count(g^m)=" << w.count_g_m
                    << "\n";
            }
        }
        out << (v.pass ? "PASS" : "FAIL") << ": " << doc.group_name << " "
            << (v.plus_mode ? "FSZ+" : "FSZ") << " test "
            << (v.pass ? "passed" : "failed") << "\n";
        return out.str();
    }
    if (!doc.indicators.empty()) {
        for (const IndicatorEntry& e : doc.indicators)
            out << "  nu_" << e.n << "(u_class=" << e.u_class << ", " << e.label
                << ") = " << e.value << "  [" << e.classification << "]\n";
        return out.str();
    }
    if (!doc.zeta.empty()) {
        for (const ZetaEntry& e : doc.zeta)
            out << "  zeta_" << e.n << "(u_class=" << e.u_class << ", g=" << e.g.value()
                << ") = " << e.count << "\n";
        return out.str();
    }
    if (!doc.properties.empty()) {
        for (const PropertyResult& p : doc.properties)
            out << "  " << p.name << ": " << p.instances << " instances, " << p.failures
                << " failures " << (p.failures == 0 ? "[pass]" : "[FAIL]") << "\n";
        out << (doc.failed ? "FAIL" : "PASS") << "\n";
        return out.str();
    }
    for (const auto& [k, v] : doc.catalog_rows) out << "  " << k << ": " << v << "\n";
    return out.str();
}

}  // namespace

std::string render(const ReportDocument& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return render_json(doc);
        case OutputFormat::Csv: return render_csv(doc);
        case OutputFormat::Text: return render_text(doc);
    }
    return "";
}

int64_t emit(const ReportDocument& doc, const RunConfig& config) {
    std::string payload = render(doc, config.format);
    if (config.out_path) {
        std::ofstream out(*config.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output path: " + *config.out_path);
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!out) throw std::runtime_error("write failed: " + *config.out_path);
    } else {
        std::cout << payload;
    }
    return static_cast<int64_t>(payload.size());
}

int exit_code(const ReportDocument& doc) { return doc.failed ? 1 : 0; }

}  // namespace fszlab
