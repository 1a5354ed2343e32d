#include "hecke/hecke.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hecke;

constexpr int exit_pass = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_invalid = 2;

struct Config {
    int r = 2, p = 2, n = 2;
    std::string q;
    std::vector<std::string> Q;
    std::vector<std::string> scope;
    std::string format = "json";
    std::string output;
    std::size_t max_dim = 0;
    unsigned jobs = 0;
    std::string mutation = "none";
    bool timing = false;
    std::string what;
};

class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

HeckeParams build_params(const Config& c) {
    if (c.r < 1 || c.p < 1 || c.n < 1) throw InvalidInput("r, p and n must be positive");
    if (c.r % c.p != 0) throw InvalidInput("p must divide r");
    HeckeParams P = default_params(c.r, c.p, c.n);
    try {
        if (!c.q.empty()) P.q = parse_rational(c.q);
        if (!c.Q.empty()) {
            if (static_cast<int>(c.Q.size()) != P.d())
                throw InvalidInput("--Q needs d = r/p = " + std::to_string(P.d()) + " values, got " + std::to_string(c.Q.size()));
            for (std::size_t i = 0; i < c.Q.size(); ++i) P.Q[i] = parse_rational(c.Q[i]);
        }
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(std::string("malformed rational: ") + e.what());
    }
    return P;
}

std::size_t max_dim(const Config& c) { return c.max_dim ? c.max_dim : max_dim_from_env(); }

void emit(const Config& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw InvalidInput("cannot open output file " + c.output);
    out << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string csv_join(const std::vector<std::string>& xs, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? std::string(1, sep) : "") + xs[i];
    return out;
}

std::string cyclo_csv(const CycloRational& x) { return csv_join(x.to_strings()); }
std::string compact(const Json& j) { return j.dump(); }

/// Semisimplicity report; false when rejected.
bool report_semisimplicity(const HeckeParams& P, Json& out) {
    const auto res = check_semisimple(P);
    out = Json{{"schema_version", schema_version}, {"params", params_json(P)}, {"semisimple", res.semisimple}};
    if (res.witness) out["witness"] = witness_json(*res.witness);
    return res.semisimple;
}

void print_rejection(const SemisimplicityWitness& w) {
    std::cerr << "invalid parameters: semisimplicity factor " << w.expression << " vanishes (" << w.kind << ")\n";
}

/// Rejects non-semisimple overrides before any run.
HeckeParams checked_params(const Config& c) {
    HeckeParams P = build_params(c);
    const auto res = check_semisimple(P);
    if (!res.semisimple) {
        print_rejection(*res.witness);
        throw ParameterError("not semisimple", res.witness);
    }
    return P;
}

int cmd_params(const Config& c) {
    const HeckeParams P = build_params(c);
    Json j;
    const bool ok = report_semisimplicity(P, j);
    if (c.format == "csv") {
        std::ostringstream os;
        os << "r,p,n,q,Q,semisimple,witness\n"
           << P.r << ',' << P.p << ',' << P.n << ',' << P.q.get_str() << ','
           << csv_join([&] {
                  std::vector<std::string> v;
                  for (const auto& x : P.Q) v.push_back(x.get_str());
                  return v;
              }())
           << ',' << (ok ? "true" : "false") << ',' << csv_field(ok ? "" : j["witness"]["factor"].get<std::string>()) << "\n";
        emit(c, os.str());
    } else {
        emit(c, json_text(j));
    }
    if (!ok) print_rejection(*check_semisimple(P).witness);
    return ok ? exit_pass : exit_invalid;
}

SuiteOptions suite_options(const Config& c) {
    SuiteOptions o;
    o.scope = c.scope;
    o.mutation = mutation_from_string(c.mutation);
    o.max_dim = max_dim(c);
    o.jobs = c.jobs;
    o.timing = c.timing;
    return o;
}

int cmd_verify(const Config& c) {
    const HeckeParams P = checked_params(c);
    const SuiteOptions opt = suite_options(c);
    const Report rep = run_suite(P, opt);
    emit(c, c.format == "csv" ? rep.to_csv(c.timing) : json_text(rep.to_json(c.timing)));
    return rep.all_passed() ? exit_pass : exit_check_failure;
}

Json gamma_table(const SeminormalModel& M) {
    Json shapes = Json::array();
    for (int b = 0; b < M.num_shapes(); ++b) {
        Json tabs = Json::array();
        for (int i = 0; i < M.dim(b); ++i) tabs.push_back(Json{{"tableau", to_json(M.tableau({b, i}))}, {"gamma", to_json(M.gamma({b, i}))}});
        shapes.push_back(Json{{"shape", to_json(M.shape(b))}, {"tableaux", tabs}});
    }
    return shapes;
}

Json header(const HeckeParams& P, const std::string& what) {
    return Json{{"schema_version", schema_version}, {"what", what}, {"params", params_json(P)}};
}

int cmd_dump(const Config& c) {
    static const std::vector<std::string> kinds = {"gamma", "basis", "idempotents", "twisted-center", "dims"};
    if (std::find(kinds.begin(), kinds.end(), c.what) == kinds.end()) throw InvalidInput("unknown --what " + c.what);
    const HeckeParams P = checked_params(c);
    const SeminormalModel M(P);
    const GrpnLayer G(M);
    const bool csv = c.format == "csv";
    std::ostringstream os;
    Json j = header(P, c.what);

    if (c.what == "gamma") {
        if (csv) {
            os << "shape,tableau,gamma\n";
            for (int b = 0; b < M.num_shapes(); ++b)
                for (int i = 0; i < M.dim(b); ++i)
                    os << csv_field(compact(to_json(M.shape(b)))) << ',' << csv_field(compact(to_json(M.tableau({b, i})))) << ','
                       << cyclo_csv(M.gamma({b, i})) << "\n";
        } else {
            j["shapes"] = gamma_table(M);
        }
    } else if (c.what == "basis") {
        const auto basis = G.basis();
        if (csv) {
            os << "index,s,t,k,term_s,term_t,coefficient\n";
            for (std::size_t e = 0; e < basis.size(); ++e) {
                const auto& lab = basis[e].label;
                for (const auto& [key, coef] : basis[e].value.terms) {
                    auto [b, s, t] = key;
                    os << e << ',' << csv_field(compact(to_json(M.tableau(lab.s)))) << ',' << csv_field(compact(to_json(M.tableau(lab.t))))
                       << ',' << lab.k << ',' << csv_field(compact(to_json(M.tableau({b, s})))) << ','
                       << csv_field(compact(to_json(M.tableau({b, t})))) << ',' << cyclo_csv(coef) << "\n";
                }
            }
        } else {
            Json arr = Json::array();
            for (const auto& e : basis)
                arr.push_back(Json{{"shape", to_json(M.shape(e.label.s.shape))},
                                   {"s", to_json(M.tableau(e.label.s))},
                                   {"t", to_json(M.tableau(e.label.t))},
                                   {"k", e.label.k},
                                   {"terms", to_json(M, e.value)}});
            j["count"] = basis.size();
            j["basis"] = arr;
        }
    } else if (c.what == "idempotents") {
        const auto ids = G.central_idempotents();
        if (csv) {
            os << "shape,k,block,row,col,value\n";
            for (const auto& e : ids) {
                const BlockMatrix m = M.to_block(e.value);
                for (int b = 0; b < M.num_shapes(); ++b) {
                    const Matrix& blk = m.block(static_cast<std::size_t>(b));
                    for (std::size_t r = 0; r < blk.rows(); ++r)
                        for (std::size_t col = 0; col < blk.cols(); ++col)
                            if (!blk(r, col).is_zero())
                                os << csv_field(compact(to_json(M.shape(e.shape)))) << ',' << e.k << ','
                                   << csv_field(compact(to_json(M.shape(b)))) << ',' << r << ',' << col << ',' << cyclo_csv(blk(r, col)) << "\n";
                }
            }
        } else {
            Json arr = Json::array();
            for (const auto& e : ids)
                arr.push_back(Json{{"shape", to_json(M.shape(e.shape))}, {"k", e.k}, {"blocks", to_json(M, M.to_block(e.value))}});
            j["count"] = ids.size();
            j["idempotents"] = arr;
        }
    } else if (c.what == "twisted-center") {
        if (csv) os << "k,shape,s,t,coefficient\n";
        Json per_k = Json::array();
        for (int k = 0; k < M.p(); ++k) {
            const auto zs = G.twisted_center_basis(k);
            Json arr = Json::array();
            for (const auto& z : zs) {
                if (csv) {
                    for (const auto& [key, coef] : z.value.terms) {
                        auto [b, s, t] = key;
                        os << k << ',' << csv_field(compact(to_json(M.shape(z.shape)))) << ',' << csv_field(compact(to_json(M.tableau({b, s}))))
                           << ',' << csv_field(compact(to_json(M.tableau({b, t})))) << ',' << cyclo_csv(coef) << "\n";
                    }
                } else {
                    arr.push_back(Json{{"shape", to_json(M.shape(z.shape))}, {"terms", to_json(M, z.value)}});
                }
            }
            per_k.push_back(Json{{"k", k}, {"count", zs.size()}, {"elements", arr}});
        }
        j["twisted_center"] = per_k;
    } else {
        const DimAudit a = dim_audit(M);
        SuiteOptions opt = suite_options(c);
        opt.scope.clear();
        const bool passed = run_suite(P, opt).all_passed();
        Json dims = Json::array();
        for (int b = 0; b < M.num_shapes(); ++b) dims.push_back(Json{{"shape", to_json(M.shape(b))}, {"dim", M.dim(b)}});
        if (csv) {
            os << "key,value\n"
               << "r," << P.r << "\np," << P.p << "\nn," << P.n << "\ndim_H_rn," << a.dim_hrn << "\ndim_H_rpn," << a.dim_hrpn
               << "\ngrpn_basis_size," << a.basis_size << "\nnum_shapes," << a.num_shapes << "\nnum_central_idempotents,"
               << a.num_central_idempotents << "\nall_checks_passed," << (passed ? "true" : "false") << "\n";
        } else {
            j = Json{{"schema_version", schema_version},
                     {"what", "dims"},
                     {"r", P.r},
                     {"p", P.p},
                     {"n", P.n},
                     {"params", params_json(P)},
                     {"dims", dims},
                     {"counts", to_json(a)},
                     {"all_checks_passed", passed}};
        }
        emit(c, csv ? os.str() : json_text(j));
        return passed ? exit_pass : exit_check_failure;
    }
    emit(c, csv ? os.str() : json_text(j));
    return exit_pass;
}

/// Enumeration query: shapes, Specht dimensions and algebra dimensions without running checks.
int cmd_dims(const Config& c) {
    const HeckeParams P = checked_params(c);
    const SeminormalModel M(P);
    const GrpnLayer G(M);
    const DimAudit a = dim_audit(M);
    if (c.format == "csv") {
        std::ostringstream os;
        os << "shape,dim,o_lambda,p_lambda\n";
        for (int b = 0; b < M.num_shapes(); ++b)
            os << csv_field(compact(to_json(M.shape(b)))) << ',' << M.dim(b) << ',' << G.o(b) << ',' << G.p_lambda(b) << "\n";
        emit(c, os.str());
    } else {
        Json shapes = Json::array();
        for (int b = 0; b < M.num_shapes(); ++b)
            shapes.push_back(Json{{"shape", to_json(M.shape(b))}, {"dim", M.dim(b)}, {"o_lambda", G.o(b)}, {"p_lambda", G.p_lambda(b)}});
        Json reps = Json::array();
        for (int b : G.class_representatives()) reps.push_back(to_json(M.shape(b)));
        emit(c, json_text(Json{{"schema_version", schema_version},
                               {"params", params_json(P)},
                               {"shapes", shapes},
                               {"sigma_class_representatives", reps},
                               {"audit", to_json(a)}}));
    }
    return a.ok() ? exit_pass : exit_check_failure;
}

void add_point_options(CLI::App* cmd, Config& c) {
    cmd->add_option("--r", c.r, "number of cyclotomic parameters (r)")->check(CLI::PositiveNumber);
    cmd->add_option("--p", c.p, "order of eps; must divide r")->check(CLI::PositiveNumber);
    cmd->add_option("--n", c.n, "rank")->check(CLI::PositiveNumber);
    cmd->add_option("--q", c.q, "Hecke parameter as a/b");
    cmd->add_option("--Q", c.Q, "Q_1..Q_d as comma-separated a/b values")->delimiter(',');
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", c.output, "write to this file instead of stdout");
}

void add_run_options(CLI::App* cmd, Config& c) {
    cmd->add_option("--max-dim", c.max_dim, std::string("word-basis dimension bound (default ") + max_dim_env + " or " +
                                                std::to_string(default_max_dim) + ")");
    cmd->add_option("--jobs", c.jobs, "worker threads (0: hardware concurrency)");
    cmd->add_option("--mutation", c.mutation, "seeded corruption for sensitivity runs")
        ->check(CLI::IsMember({"none", "gamma_scale", "eps_power", "wrong_mk", "drop_a_factor", "h_parity"}));
    cmd->add_flag("--timing", c.timing, "include per-check wall time (output no longer byte-stable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seminormal forms of cyclotomic Hecke algebras: parameters, verification, dumps"};
    app.require_subcommand(1);
    Config c;

    bool check_flag = false;
    auto* params = app.add_subcommand("params", "validate a parameter point");
    add_point_options(params, c);
    params->add_flag("--check", check_flag, "evaluate the semisimplicity product")->required();

    auto* verify = app.add_subcommand("verify", "run the property suite");
    add_point_options(verify, c);
    add_run_options(verify, c);
    verify->add_option("--scope", c.scope, "comma-separated check names (default: all)")->delimiter(',');

    auto* dump = app.add_subcommand("dump", "write structure tables");
    add_point_options(dump, c);
    add_run_options(dump, c);
    dump->add_option("--what", c.what, "gamma | basis | idempotents | twisted-center | dims")->required();

    auto* dims = app.add_subcommand("dims", "shapes, Specht dimensions and algebra dimensions");
    add_point_options(dims, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_invalid;
    }

    try {
        if (*params) return cmd_params(c);
        if (*verify) return cmd_verify(c);
        if (*dump) return cmd_dump(c);
        if (*dims) return cmd_dims(c);
    } catch (const ParameterError& e) {
        if (!e.witness) std::cerr << "invalid parameters: " << e.what() << "\n";
        return exit_invalid;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const UnknownCheck& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const DimensionBoundExceeded& e) {
        std::cerr << "grid point rejected: " << e.what() << " (raise --max-dim or " << max_dim_env << ")\n";
        return exit_invalid;
    }
    return exit_invalid;
}
