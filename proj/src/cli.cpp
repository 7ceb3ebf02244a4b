#include "prodcolor/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodcolor/construct.hpp"
#include "prodcolor/graph_spec.hpp"
#include "prodcolor/sidon.hpp"
#include "prodcolor/solver.hpp"

namespace prodcolor {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "prodcolor 0.1.0";

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t env_budget(std::uint64_t fallback) {
    if (const char* s = std::getenv("SIDON_COLOR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

ordered_json rational_json(const Rational& r) {
    ordered_json j;
    j["fraction"] = r.str();
    j["approx"] = fixed6(r.approx());
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<long long> parse_element_list(const std::string& csv) {
    std::vector<long long> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(std::stoll(cur));
            cur.clear();
        }
    };
    for (char ch : csv) {
        if (ch == ',' || ch == ' ') flush();
        else cur += ch;
    }
    flush();
    if (out.empty()) throw std::invalid_argument("no elements given");
    return out;
}

ForbiddenFamily parse_family(const std::string& name) {
    if (name == "p3") return ForbiddenFamily::p3();
    if (name == "p4") return ForbiddenFamily::p4();
    if (name == "acyclic") return ForbiddenFamily::even_cycles();
    if (name == "none") return ForbiddenFamily::none();
    if (name.rfind("explicit:", 0) == 0) {
        std::string file = name.substr(9);
        nlohmann::json j = nlohmann::json::parse(read_file(file));
        if (!j.is_array())
            throw std::invalid_argument("explicit family file must be a json array of graphs");
        std::vector<Graph> members;
        for (const auto& item : j) members.push_back(graph_from_json_text(item.dump()));
        return ForbiddenFamily::explicit_list(std::move(members));
    }
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected p3, p4, acyclic, none or explicit:<file>)");
}

SidonStrategy parse_strategy(const std::string& name) {
    if (name == "r") return SidonStrategy::Residue;
    if (name == "s") return SidonStrategy::Coprime;
    if (name == "t") return SidonStrategy::ExponentMultiples;
    throw std::invalid_argument("unknown strategy '" + name + "' (expected r, s or t)");
}

// ---------------------------------------------------------------- sidon ----

int cmd_sidon_gen(std::ostream& out, const std::string& set, int k, int count,
                  long long limit) {
    if ((count < 0) == (limit < 0))
        throw std::invalid_argument("give exactly one of --count and --limit");
    SidonSet s;
    if (set == "r") {
        if (count >= 0) s = generate_R(k, count);
        else s = generate_R(k, limit >= 1 ? (int)((limit - 1) / k + 1) : 0);
    } else if (set == "s") {
        s = count >= 0 ? first_n_S(k, count) : generate_S(k, limit);
    } else {
        s = count >= 0 ? first_n_T(k, count) : generate_T(k, limit);
    }
    ordered_json j;
    j["set"] = set;
    j["k"] = k;
    j["count"] = s.elements.size();
    j["elements"] = s.elements;
    try {
        Rational d = set == "r" ? density_R(k) : set == "s" ? density_S(k) : density_T(k);
        j["density"] = rational_json(d);
    } catch (const std::overflow_error&) {
        j["density"] = nullptr;  // closed form exceeds 64-bit range for this k
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_sidon_verify(std::ostream& out, int k, const std::string& csv) {
    auto elements = parse_element_list(csv);
    auto violation = find_violation(elements, k);
    ordered_json j;
    j["k"] = k;
    j["elements"] = elements;
    j["k_multiplicative"] = !violation.has_value();
    if (violation) {
        ordered_json w;
        w["a"] = violation->a;
        w["b"] = violation->b;
        w["x"] = violation->x;
        w["y"] = violation->y;
        j["violation"] = w;
    }
    out << j.dump(2) << "\n";
    return violation ? 1 : 0;
}

int cmd_sidon_max(std::ostream& out, long long n, int k) {
    SearchBudget budget(env_budget(kDefaultSidonBudget));
    MaxSidonResult res = max_sidon_subset(n, k, &budget);
    long long s_count = (long long)generate_S(k, n).elements.size();
    ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["cardinality"] = res.set.elements.size();
    j["elements"] = res.set.elements;
    j["optimal"] = res.optimal;
    j["coprime_set_count"] = s_count;
    j["ratio_vs_coprime_set"] =
        rational_json(Rational((long long)res.set.elements.size(), s_count));
    out << j.dump(2) << "\n";
    return res.optimal ? 0 : 3;
}

int cmd_sidon_density(std::ostream& out, const std::string& set, int k) {
    Rational d = set == "r" ? density_R(k) : set == "s" ? density_S(k) : density_T(k);
    ordered_json j;
    j["set"] = set;
    j["k"] = k;
    j["density"] = rational_json(d);
    out << j.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------- color ----

int cmd_color_solve(std::ostream& out, const std::string& graph_spec,
                    const std::string& family_name, const std::string& objective,
                    int p) {
    ParsedGraph pg = parse_graph_spec(graph_spec);
    const Graph& g = pg.product.graph;
    SearchBudget budget(env_budget(kDefaultColorBudget));

    ordered_json j;
    j["graph"] = pg.canonical;
    if (p > 0) {
        j["p"] = p;
        SolveResult sp = min_lp1_span(g, p, &budget);
        SolveResult rr = min_lp1_range(g, p, &budget);
        if (!is_lp1_labelling(g, sp.witness, p) || !is_lp1_labelling(g, rr.witness, p))
            throw std::logic_error("solver produced an invalid labelling");
        j["edge_span"] = sp.value;
        j["range"] = rr.value;
        j["optimal"] = sp.optimal && rr.optimal;
        j["span_labels"] = sp.witness.colors;
        j["range_labels"] = rr.witness.colors;
        out << j.dump(2) << "\n";
        return (sp.optimal && rr.optimal) ? 0 : 3;
    }

    ForbiddenFamily fam = parse_family(family_name);
    j["family"] = family_name;
    j["objective"] = objective;
    SolveResult res = objective == "span" ? chromatic_span(g, fam, &budget)
                                          : chromatic_number(g, fam, &budget);
    if (!is_f_free(g, res.witness, fam))
        throw std::logic_error("solver produced an invalid colouring");
    j["value"] = res.value;
    j["optimal"] = res.optimal;
    j["colors"] = res.witness.colors;
    out << j.dump(2) << "\n";
    return res.optimal ? 0 : 3;
}

int cmd_color_check(std::ostream& out, const std::string& graph_spec,
                    const std::string& coloring_file, const std::string& family_name,
                    int p) {
    ParsedGraph pg = parse_graph_spec(graph_spec);
    const Graph& g = pg.product.graph;
    Coloring c = coloring_from_json_text(read_file(coloring_file));
    if ((int)c.colors.size() != g.vertex_count())
        throw std::invalid_argument("coloring size does not match the graph");

    ordered_json j;
    j["graph"] = pg.canonical;
    bool ok;
    if (p > 0) {
        j["p"] = p;
        bool valid = is_lp1_labelling(g, c, p);
        j["valid"] = valid;
        j["edge_span"] = lp1_span(g, c);
        j["range"] = lp1_range(g, c);
        ok = valid;
    } else {
        ForbiddenFamily fam = parse_family(family_name);
        j["family"] = family_name;
        bool proper = is_proper(g, c);
        bool free = proper && is_f_free(g, c, fam);
        j["proper"] = proper;
        j["family_free"] = free;
        if (proper) j["span"] = span(g, c);
        else j["span"] = nullptr;
        j["colors_used"] = color_count(c);
        ok = proper && free;
    }
    j["ok"] = ok;
    out << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

// Ready-made factor colouring for a shape: all-distinct layouts for paths,
// powers of paths and cliques, embedding positions for powers of cycles.
// Falls back to BFS depth and then to the exact span solver.
struct Device {
    Coloring coloring;
    long long span_value = 0;
};

std::optional<Coloring> shape_device(const FactorSpec& fs) {
    if (fs.shape == 'P' || fs.shape == 'K') {
        Coloring c;
        c.colors.resize(fs.size);
        for (int i = 0; i < fs.size; ++i) c.colors[i] = i;
        return c;
    }
    if (fs.shape == 'C') return cycle_position_coloring(fs.size);
    return std::nullopt;  // hypercubes and file graphs have no fixed layout
}

Device factor_device(const FactorSpec& fs, const Graph& g, const ForbiddenFamily& fam,
                     SearchBudget& budget) {
    if (auto c = shape_device(fs)) {
        // All-distinct colours avoid every family; span depends on the shape.
        Device d{std::move(*c), 0};
        d.span_value = span(g, d.coloring);
        return d;
    }
    Coloring depth = bfs_depth_coloring(g);
    if (is_proper(g, depth) && is_f_free(g, depth, fam))
        return {depth, span(g, depth)};
    SolveResult sr = chromatic_span(g, fam, &budget);
    if (!sr.optimal)
        throw budget_error("budget exhausted while colouring a factor");
    return {std::move(sr.witness), sr.value};
}

Device factor_lp1_device(const FactorSpec& fs, const Graph& g, int p,
                         SearchBudget& budget) {
    if (auto c = shape_device(fs)) {
        // Scaling an all-distinct layout by p keeps labels distinct at
        // distance two and stretches edge differences to at least p.
        for (auto& x : c->colors) x *= p;
        Device d{std::move(*c), 0};
        d.span_value = lp1_span(g, d.coloring);
        return d;
    }
    SolveResult sr = min_lp1_span(g, p, &budget);
    if (!sr.optimal)
        throw budget_error("budget exhausted while labelling a factor");
    return {std::move(sr.witness), sr.value};
}

int cmd_color_construct(std::ostream& out, const std::string& graph_spec,
                        const std::string& family_name, const std::string& strategy_name,
                        int p) {
    ParsedGraph pg = parse_graph_spec(graph_spec);
    SidonStrategy strategy = parse_strategy(strategy_name);
    SearchBudget budget(env_budget(kDefaultColorBudget));
    int d = pg.product.dimension();

    ordered_json j;
    j["graph"] = pg.canonical;
    j["dimension"] = d;
    j["strategy"] = strategy_name;

    if (p > 0) {
        std::vector<Coloring> labels;
        long long k = 1;
        for (int i = 0; i < d; ++i) {
            Device dev = factor_lp1_device(pg.factors[i], pg.product.factors[i], p, budget);
            k = std::max(k, dev.span_value);
            labels.push_back(std::move(dev.coloring));
        }
        ProductColoringPlan plan;
        plan.factor_colorings = std::move(labels);
        plan.span_bound = (int)k;
        plan.multipliers = strategy == SidonStrategy::Residue ? generate_R((int)k, d)
                           : strategy == SidonStrategy::Coprime ? first_n_S((int)k, d)
                                                                : first_n_T((int)k, d);
        Lp1ProductResult res = lp1_weighted_labelling(plan, pg.product, p);
        bool verified = is_lp1_labelling(pg.product.graph, res.folded, p);
        j["p"] = p;
        j["k"] = k;
        j["multipliers"] = plan.multipliers.elements;
        j["edge_span_before_fold"] = lp1_span(pg.product.graph, res.combined);
        j["edge_span_bound"] = res.span_bound;
        j["range"] = lp1_range(pg.product.graph, res.folded);
        j["range_bound"] = 2 * res.span_bound;
        j["verified"] = verified;
        j["labels"] = res.folded.colors;
        out << j.dump(2) << "\n";
        return verified ? 0 : 1;
    }

    ForbiddenFamily fam = parse_family(family_name);
    j["family"] = family_name;
    std::vector<Coloring> colorings;
    long long k = 1;
    for (int i = 0; i < d; ++i) {
        Device dev = factor_device(pg.factors[i], pg.product.factors[i], fam, budget);
        k = std::max(k, std::max<long long>(1, dev.span_value));
        colorings.push_back(std::move(dev.coloring));
    }
    PipelineResult res = sidon_product_coloring(pg.product, fam, (int)k, strategy,
                                                &colorings, &budget);
    bool verified = is_proper(pg.product.graph, res.folded) &&
                    is_f_free(pg.product.graph, res.folded, fam);
    j["k"] = k;
    j["multipliers"] = res.multipliers.elements;
    j["span_before_fold"] = span(pg.product.graph, res.combined);
    j["span_bound"] = res.span_bound;
    j["closed_form_bound"] = res.closed_form_bound;
    j["colors_used"] = res.color_count;
    j["verified"] = verified;
    j["colors"] = res.folded.colors;
    out << j.dump(2) << "\n";
    return verified ? 0 : 1;
}

// ------------------------------------------------------------ reproduce ----

struct TableRow {
    int k_lo, k_hi;
    std::vector<long long> elements;
    std::string density;
};

const std::vector<TableRow>& golden_coprime_table() {
    static const std::vector<TableRow> rows = {
        {2, 2, {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29}, "1/2"},
        {3, 4, {1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37, 41, 43}, "1/3"},
        {5, 6, {1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53}, "4/15"},
        {7, 10, {1, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}, "8/35"},
        {11, 12, {1, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67}, "16/77"},
        {13, 16, {1, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71}, "192/1001"},
        {17, 18, {1, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73}, "3072/17017"},
        {19, 22, {1, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79}, "55296/323323"},
        {23, 28, {1, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83}, "110592/676039"},
        {29, 30, {1, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89}, "442368/2800733"},
    };
    return rows;
}

const std::vector<TableRow>& golden_exponent_table() {
    static const std::vector<TableRow> rows = {
        {2, 2, {1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21}, "2/3"},
        {3, 3, {1, 4, 5, 7, 9, 11, 13, 16, 17, 19, 20, 23, 25, 28, 29}, "1/2"},
        {4, 4, {1, 5, 7, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37}, "3/7"},
        {5, 6, {1, 7, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43}, "5/14"},
        {7, 7, {1, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47}, "5/16"},
        {8, 8, {1, 9, 11, 13, 16, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47}, "7/24"},
        {9, 10, {1, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47}, "7/26"},
        {11, 12, {1, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49}, "77/312"},
        {13, 15, {1, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49, 53}, "11/48"},
    };
    return rows;
}

const std::vector<long long>& golden_grid_bounds() {
    static const std::vector<long long> bounds = {5,  13, 17, 21, 29, 37, 45, 49,
                                                  53, 61, 65, 69, 77, 81, 85};
    return bounds;
}

std::vector<TableRow> build_sidon_table(bool coprime, int k_max) {
    std::vector<TableRow> rows;
    for (int k = 2; k <= k_max; ++k) {
        auto els = (coprime ? first_n_S(k, 15) : first_n_T(k, 15)).elements;
        std::string dens = (coprime ? density_S(k) : density_T(k)).str();
        if (!rows.empty() && rows.back().elements == els && rows.back().density == dens)
            rows.back().k_hi = k;
        else
            rows.push_back({k, k, std::move(els), std::move(dens)});
    }
    return rows;
}

const TableRow* row_for_k(const std::vector<TableRow>& rows, int k) {
    for (const auto& r : rows)
        if (r.k_lo <= k && k <= r.k_hi) return &r;
    return nullptr;
}

std::string k_label(const TableRow& r) {
    if (r.k_lo == r.k_hi) return std::to_string(r.k_lo);
    return std::to_string(r.k_lo) + "-" + std::to_string(r.k_hi);
}

int cmd_reproduce_sidon_table(std::ostream& out, bool coprime, int k_max, bool csv,
                              bool diff) {
    auto rows = build_sidon_table(coprime, k_max);
    const char* name = coprime ? "s" : "t";
    if (diff) {
        const auto& golden = coprime ? golden_coprime_table() : golden_exponent_table();
        int golden_max = golden.back().k_hi;
        ordered_json mism = ordered_json::array();
        for (int k = 2; k <= std::min(k_max, golden_max); ++k) {
            const TableRow* got = row_for_k(rows, k);
            const TableRow* want = row_for_k(golden, k);
            if (got->elements != want->elements || got->density != want->density) {
                ordered_json m;
                m["k"] = k;
                m["expected_elements"] = want->elements;
                m["got_elements"] = got->elements;
                m["expected_density"] = want->density;
                m["got_density"] = got->density;
                mism.push_back(std::move(m));
            }
        }
        ordered_json j;
        j["table"] = name;
        j["match"] = mism.empty();
        j["mismatches"] = mism;
        out << j.dump(2) << "\n";
        return mism.empty() ? 0 : 1;
    }
    if (csv) {
        out << "k,elements,density\n";
        for (const auto& r : rows) {
            out << k_label(r) << ",";
            for (std::size_t i = 0; i < r.elements.size(); ++i) {
                if (i) out << " ";
                out << r.elements[i];
            }
            out << "," << r.density << "\n";
        }
        return 0;
    }
    ordered_json j;
    j["table"] = name;
    j["k_max"] = k_max;
    auto arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json jr;
        jr["k_min"] = r.k_lo;
        jr["k_max"] = r.k_hi;
        jr["elements"] = r.elements;
        jr["density"] = r.density;
        arr.push_back(std::move(jr));
    }
    j["rows"] = arr;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_reproduce_grid(std::ostream& out, int d_max, bool csv, bool diff) {
    std::vector<long long> ts, bounds;
    SidonSet t2 = first_n_T(2, d_max);
    for (int d = 1; d <= d_max; ++d) {
        ts.push_back(t2.elements[d - 1]);
        bounds.push_back(4 * t2.elements[d - 1] + 1);
    }
    if (diff) {
        const auto& golden = golden_grid_bounds();
        ordered_json mism = ordered_json::array();
        for (int d = 1; d <= std::min<int>(d_max, (int)golden.size()); ++d) {
            if (bounds[d - 1] != golden[d - 1]) {
                ordered_json m;
                m["d"] = d;
                m["expected"] = golden[d - 1];
                m["got"] = bounds[d - 1];
                mism.push_back(std::move(m));
            }
        }
        ordered_json j;
        j["table"] = "grid";
        j["match"] = mism.empty();
        j["mismatches"] = mism;
        out << j.dump(2) << "\n";
        return mism.empty() ? 0 : 1;
    }
    if (csv) {
        out << "d,t,bound\n";
        for (int d = 1; d <= d_max; ++d)
            out << d << "," << ts[d - 1] << "," << bounds[d - 1] << "\n";
        return 0;
    }
    ordered_json j;
    j["table"] = "grid";
    j["d_max"] = d_max;
    auto arr = ordered_json::array();
    for (int d = 1; d <= d_max; ++d) {
        ordered_json jr;
        jr["d"] = d;
        jr["t"] = ts[d - 1];
        jr["bound"] = bounds[d - 1];
        arr.push_back(std::move(jr));
    }
    j["rows"] = arr;
    out << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    err << kVersion << "\n";

    CLI::App app{"F-free colourings of graph products from multiplicative Sidon sets"};
    app.name("prodcolor");
    app.require_subcommand(1);

    // sidon
    auto* sidon = app.add_subcommand("sidon", "k-multiplicative set operations");
    sidon->require_subcommand(1);

    std::string gen_set;
    int gen_k = 2, gen_count = -1;
    long long gen_limit = -1;
    auto* gen = sidon->add_subcommand("gen", "generate construction elements");
    gen->add_option("--set", gen_set, "construction: r, s or t")
        ->required()
        ->check(CLI::IsMember({"r", "s", "t"}));
    gen->add_option("--k", gen_k, "multiplicativity parameter")->required();
    gen->add_option("--count", gen_count, "emit the first N elements");
    gen->add_option("--limit", gen_limit, "emit all elements <= L");

    int verify_k = 2;
    std::string verify_elements;
    auto* verify = sidon->add_subcommand("verify", "check a set for k-multiplicativity");
    verify->add_option("--k", verify_k)->required();
    verify->add_option("--elements", verify_elements, "comma-separated elements")->required();

    long long max_n = 1;
    int max_k = 2;
    auto* mx = sidon->add_subcommand("max", "maximum k-multiplicative subset of [1,n]");
    mx->add_option("--n", max_n)->required();
    mx->add_option("--k", max_k)->required();

    std::string dens_set;
    int dens_k = 2;
    auto* dens = sidon->add_subcommand("density", "closed-form density of a construction");
    dens->add_option("--set", dens_set)->required()->check(CLI::IsMember({"r", "s", "t"}));
    dens->add_option("--k", dens_k)->required();

    // color
    auto* color = app.add_subcommand("color", "family-free colouring operations");
    color->require_subcommand(1);

    std::string solve_graph, solve_family = "none", solve_objective = "colors";
    int solve_p = 0;
    auto* solve = color->add_subcommand("solve", "exact optimum plus witness");
    solve->add_option("--graph", solve_graph, "graph spec or json file")->required();
    solve->add_option("--family", solve_family, "p3, p4, acyclic, none or explicit:<file>");
    solve->add_option("--objective", solve_objective)
        ->check(CLI::IsMember({"colors", "span"}));
    solve->add_option("--p", solve_p, "L(p,1) mode: report edge span and range");

    std::string check_graph, check_coloring, check_family = "none";
    int check_p = 0;
    auto* check = color->add_subcommand("check", "validate a colouring file");
    check->add_option("--graph", check_graph)->required();
    check->add_option("--coloring", check_coloring, "json file with {\"colors\": [...]}")
        ->required();
    check->add_option("--family", check_family);
    check->add_option("--p", check_p, "validate as an L(p,1) labelling");

    std::string cons_graph, cons_family = "p3", cons_strategy = "t";
    int cons_p = 0;
    auto* cons = color->add_subcommand("construct", "colour a product from its factors");
    cons->add_option("--graph", cons_graph, "product spec, e.g. P5^2xP5^2")->required();
    cons->add_option("--family", cons_family);
    cons->add_option("--strategy", cons_strategy, "multiplier set: r, s or t")
        ->check(CLI::IsMember({"r", "s", "t"}));
    cons->add_option("--p", cons_p, "construct an L(p,1) labelling instead");

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "regenerate the reference tables");
    rep->require_subcommand(1);
    bool rs_csv = false, rs_diff = false;
    int rs_kmax = 30;
    auto* rep_s = rep->add_subcommand("s", "coprime construction table");
    rep_s->add_flag("--csv", rs_csv);
    rep_s->add_flag("--diff", rs_diff, "compare against the stored reference");
    rep_s->add_option("--k-max", rs_kmax);
    bool rt_csv = false, rt_diff = false;
    int rt_kmax = 15;
    auto* rep_t = rep->add_subcommand("t", "exponent-multiple construction table");
    rep_t->add_flag("--csv", rt_csv);
    rep_t->add_flag("--diff", rt_diff);
    rep_t->add_option("--k-max", rt_kmax);
    bool rg_csv = false, rg_diff = false;
    int rg_dmax = 15;
    auto* rep_g = rep->add_subcommand("grid", "colour bounds for k=2 grid products");
    rep_g->add_flag("--csv", rg_csv);
    rep_g->add_flag("--diff", rg_diff);
    rep_g->add_option("--d-max", rg_dmax);

    std::vector<const char*> argv;
    argv.push_back("prodcolor");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_sidon_gen(out, gen_set, gen_k, gen_count, gen_limit);
        if (verify->parsed()) return cmd_sidon_verify(out, verify_k, verify_elements);
        if (mx->parsed()) return cmd_sidon_max(out, max_n, max_k);
        if (dens->parsed()) return cmd_sidon_density(out, dens_set, dens_k);
        if (solve->parsed())
            return cmd_color_solve(out, solve_graph, solve_family, solve_objective, solve_p);
        if (check->parsed())
            return cmd_color_check(out, check_graph, check_coloring, check_family, check_p);
        if (cons->parsed())
            return cmd_color_construct(out, cons_graph, cons_family, cons_strategy, cons_p);
        if (rep_s->parsed()) return cmd_reproduce_sidon_table(out, true, rs_kmax, rs_csv, rs_diff);
        if (rep_t->parsed()) return cmd_reproduce_sidon_table(out, false, rt_kmax, rt_csv, rt_diff);
        if (rep_g->parsed()) return cmd_reproduce_grid(out, rg_dmax, rg_csv, rg_diff);
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace prodcolor
