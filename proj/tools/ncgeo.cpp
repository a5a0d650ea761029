#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "ncgeo/bridge.hpp"
#include "ncgeo/index_engine.hpp"
#include "ncgeo/io.hpp"
#include "ncgeo/symbol_calculus.hpp"
#include "ncgeo/verify_suite.hpp"
#include "ncgeo/weyl_parser.hpp"

namespace {

using namespace ncgeo;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write output file: " + out_path);
        out << text << "\n";
    }
}

std::vector<Cd> to_cd_entries(const SkewMatrix& m) {
    std::vector<Cd> v(m.dim() * m.dim());
    for (int j = 0; j < m.dim(); ++j)
        for (int k = 0; k < m.dim(); ++k) v[j * m.dim() + k] = Cd(m(j, k), 0.0);
    return v;
}

std::vector<Cq> to_cq_entries(const SkewMatrix& m) {
    std::vector<Cq> v(m.dim() * m.dim());
    for (int j = 0; j < m.dim(); ++j)
        for (int k = 0; k < m.dim(); ++k) v[j * m.dim() + k] = Cq(Rational(m(j, k)));
    return v;
}

template <class K>
std::string element_terms_json(const WeylElement<K>& e) {
    std::vector<std::string> terms;
    const int d = e.dim();
    for (const auto& [m, c] : e.terms()) {
        std::vector<std::string> ax, axi;
        for (int j = 0; j < d; ++j) ax.push_back(jsonw::num(long(m[j])));
        for (int j = d; j < 2 * d; ++j) axi.push_back(jsonw::num(long(m[j])));
        Cd v = ScalarOps<K>::to_cd(c);
        terms.push_back(jsonw::obj({{"x", jsonw::arr(ax)},
                                    {"xi", jsonw::arr(axi)},
                                    {"re", jsonw::num(v.real())},
                                    {"im", jsonw::num(v.imag())}}));
    }
    return jsonw::arr(terms);
}

template <class K>
std::string run_compose(const SkewMatrix& theta, const SkewMatrix& theta_prime,
                        const std::string& ea, const std::string& eb, int order,
                        std::vector<K> th, std::vector<K> tp) {
    auto ctx = WeylContext<K>::make(theta.dim(), AlgebraKind::Symbol, std::move(th), std::move(tp));
    WeylElement<K> a = WeylParser<K>::parse(ea, ctx);
    WeylElement<K> b = WeylParser<K>::parse(eb, ctx);
    int n = order >= 0 ? order
                       : std::max(0, a.bidegree().deg_xi == BiDegree::neg_inf
                                         ? 0
                                         : a.bidegree().deg_xi);
    SymbolExpansion<K> exp = compose(a, b, n);
    WeylElement<K> c = exp.total();
    CompositionCheck chk = verify_composition(a, b);

    std::vector<std::string> groups;
    for (const auto& [bound, elem] : exp.terms)
        groups.push_back(jsonw::obj({{"order_bound", bound == BiDegree::neg_inf
                                                        ? jsonw::str("-inf")
                                                        : jsonw::num(long(bound))},
                                     {"element", jsonw::str(to_string(elem))}}));
    return jsonw::obj({{"c", jsonw::str(to_string(c))},
                       {"terms", element_terms_json(c)},
                       {"expansion", jsonw::arr(groups)},
                       {"verified", chk.ok ? "true" : "false"},
                       {"residual", jsonw::num(chk.residual)},
                       {"exact", std::is_same_v<K, Cq> ? "true" : "false"}});
}

int real_main(int argc, char** argv) {
    CLI::App app{"quantum Euclidean space toolkit"};
    app.require_subcommand(1);

    std::string theta_path, theta_prime_path, f_path, g_path, out_path;
    std::string expr_a, expr_b, k_list, method = "both";
    double t_val = 1.0, theta_scalar = 0.5, theta_prime_scalar = 0.0;
    int nmax = 100, grid_points = 32, order = -1, m_val = 0;
    long cutoff = 100000;
    int matrix_cutoff = 2000;
    unsigned long seed = 0;
    bool exact = false, as_json = false;

    auto* nf = app.add_subcommand("normal-form", "standard form of a skew matrix");
    nf->add_option("--theta", theta_path, "JSON matrix file")->required();
    nf->add_option("--out", out_path, "output path");

    auto* ht = app.add_subcommand("heat-trace", "heat semigroup trace");
    ht->add_option("--theta", theta_path)->required();
    ht->add_option("--t", t_val, "time parameter")->required();
    ht->add_option("--nmax", nmax, "oscillator cutoff")->required();
    ht->add_option("--grid-points", grid_points, "nodes per commutative direction");
    ht->add_option("--out", out_path);

    auto* st = app.add_subcommand("star", "Moyal star product of grid functions");
    st->add_option("--f", f_path)->required();
    st->add_option("--g", g_path)->required();
    st->add_option("--theta", theta_path)->required();
    st->add_option("--out", out_path, "CSV output path (default stdout)");

    auto* co = app.add_subcommand("compose", "composition of polynomial symbols");
    co->add_option("--a", expr_a)->required();
    co->add_option("--b", expr_b)->required();
    co->add_option("--theta", theta_path)->required();
    co->add_option("--theta-prime", theta_prime_path)->required();
    co->add_option("--order", order, "expansion order (default: exact)");
    co->add_flag("--exact", exact, "exact rational arithmetic");
    co->add_option("--out", out_path);

    auto* ib = app.add_subcommand("index-bott", "d=2 Bott projector index pairing");
    ib->add_option("--theta", theta_scalar)->required();
    ib->add_option("--theta-prime", theta_prime_scalar)->required();
    ib->add_option("--cutoff", cutoff, "series cutoff");
    ib->add_option("--matrix-cutoff", matrix_cutoff, "Fock cutoff for the matrix method");
    ib->add_option("--method", method)->check(CLI::IsMember({"both", "series", "matrix"}));
    ib->add_option("--out", out_path);

    auto* cc = app.add_subcommand("cocycle-constants", "residue cocycle constants");
    cc->add_option("--m", m_val)->required();
    cc->add_option("--k", k_list, "comma-separated multi-index");
    cc->add_option("--out", out_path);

    auto* vs = app.add_subcommand("verify-suite", "run the acceptance battery");
    vs->add_option("--seed", seed);
    vs->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    if (nf->parsed()) {
        SkewMatrix theta = read_skew_matrix(theta_path);
        NormalForm n = standard_form(theta);
        emit(jsonw::obj({{"T", jsonw::matrix(n.T)},
                         {"rank2n", jsonw::num(long(n.rank2n))},
                         {"mus", jsonw::real_vector(n.mus)}}),
             out_path);
        return 0;
    }
    if (ht->parsed()) {
        SkewMatrix theta = read_skew_matrix(theta_path);
        double closed = heat_trace_closed(theta, t_val);
        HeatTraceResult num = heat_trace_numeric(make_fock_rep(theta, nmax, grid_points), t_val);
        emit(jsonw::obj({{"closed", jsonw::num(closed)},
                         {"numeric", jsonw::num(num.value)},
                         {"tail_bound", jsonw::num(num.tail_bound)},
                         {"tail_warning", num.tail_warning ? "true" : "false"}}),
             out_path);
        return 0;
    }
    if (st->parsed()) {
        SkewMatrix theta = read_skew_matrix(theta_path);
        GridFunction f = read_grid_csv(f_path), g = read_grid_csv(g_path);
        StarResult r = star(f, g, theta);
        if (r.aliasing_warning)
            std::cerr << "warning: spectral mass " << jsonw::num(r.nyquist_mass)
                      << " near the Nyquist shell\n";
        if (out_path.empty()) {
            std::cout << grid_csv_string(r.value);
        } else {
            write_grid_csv(out_path, r.value);
            std::cout << jsonw::obj({{"out", jsonw::str(out_path)},
                                     {"nyquist_mass", jsonw::num(r.nyquist_mass)},
                                     {"aliasing_warning", r.aliasing_warning ? "true" : "false"}})
                      << "\n";
        }
        return 0;
    }
    if (co->parsed()) {
        SkewMatrix theta = read_skew_matrix(theta_path);
        SkewMatrix theta_prime = read_skew_matrix(theta_prime_path);
        if (theta.dim() != theta_prime.dim())
            throw std::invalid_argument("compose: theta and theta-prime dimensions differ");
        std::string out =
            exact ? run_compose<Cq>(theta, theta_prime, expr_a, expr_b, order,
                                    to_cq_entries(theta), to_cq_entries(theta_prime))
                  : run_compose<Cd>(theta, theta_prime, expr_a, expr_b, order,
                                    to_cd_entries(theta), to_cd_entries(theta_prime));
        emit(out, out_path);
        return 0;
    }
    if (ib->parsed()) {
        BottIndexResult b = bott_index(theta_scalar, theta_prime_scalar, cutoff, matrix_cutoff);
        std::vector<std::pair<std::string, std::string>> fields;
        if (method != "series") {
            fields.emplace_back("matrix", jsonw::num(b.matrix_value));
            fields.emplace_back("matrix_tail", jsonw::num(b.matrix_tail));
        }
        if (method != "matrix") {
            fields.emplace_back("series", jsonw::num(b.series_value));
            fields.emplace_back("series_tail", jsonw::num(b.series_tail));
        }
        fields.emplace_back("closed_form", jsonw::num(b.closed_form));
        fields.emplace_back("methods_agree", b.methods_agree ? "true" : "false");
        emit(jsonw::obj(fields), out_path);
        return 0;
    }
    if (cc->parsed()) {
        std::vector<int> k;
        std::stringstream ss(k_list);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) k.push_back(std::stoi(item));
        CocycleConstants c = cocycle_constants(m_val, k);
        std::ostringstream alpha;
        alpha << c.alpha;
        std::vector<std::string> sigma;
        for (const auto& s : c.sigma) {
            std::ostringstream os;
            os << s;
            sigma.push_back(jsonw::str(os.str()));
        }
        std::vector<std::string> kk;
        for (int v : c.k) kk.push_back(jsonw::num(long(v)));
        emit(jsonw::obj({{"m", jsonw::num(long(c.m))},
                         {"k", jsonw::arr(kk)},
                         {"alpha", jsonw::str(alpha.str())},
                         {"sigma", jsonw::arr(sigma)}}),
             out_path);
        return 0;
    }
    if (vs->parsed()) {
        VerifyReport rep = run_verify_suite(seed);
        if (as_json) {
            std::vector<std::string> rows;
            for (const auto& r : rep.results)
                rows.push_back(jsonw::obj({{"id", jsonw::num(long(r.id))},
                                           {"name", jsonw::str(r.name)},
                                           {"pass", r.pass ? "true" : "false"},
                                           {"residual", jsonw::num(r.residual)},
                                           {"threshold", jsonw::num(r.threshold)}}));
            std::cout << jsonw::obj({{"seed", jsonw::num(long(rep.seed))},
                                     {"criteria", jsonw::arr(rows)},
                                     {"all_pass", rep.all_pass() ? "true" : "false"}})
                      << "\n";
        } else {
            std::printf("verify-suite seed=%lu\n", rep.seed);
            for (const auto& r : rep.results)
                std::printf("  [%s] %d. %-55s residual=%.3e%s\n", r.pass ? "PASS" : "FAIL", r.id,
                            r.name.c_str(), r.residual,
                            r.detail.empty() ? "" : ("  " + r.detail).c_str());
            std::printf("%s\n", rep.all_pass() ? "ALL PASS" : "FAILURES PRESENT");
        }
        return rep.all_pass() ? 0 : 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return real_main(argc, argv);
    } catch (const ncgeo::GateError& e) {
        std::cout << ncgeo::jsonw::obj(
                         {{"error", ncgeo::jsonw::obj({{"kind", ncgeo::jsonw::str("numerical-gate")},
                                                       {"message", ncgeo::jsonw::str(e.what())}})}})
                  << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cout << ncgeo::jsonw::obj(
                         {{"error", ncgeo::jsonw::obj({{"kind", ncgeo::jsonw::str("validation")},
                                                       {"message", ncgeo::jsonw::str(e.what())}})}})
                  << "\n";
        return 2;
    }
}
