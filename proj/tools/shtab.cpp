// Command-line front end: compute | enumerate | verify | growth | orbit | lrcoef.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include <shtab/shtab.hpp>

namespace {

using namespace shtab;
using nlohmann::json;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

ShiftedTableau load_tableau(const std::string& path, int n) {
    std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return io::tableau_from_json(json::parse(text));
    return io::from_text(text, n);
}

std::string render(const ShiftedTableau& T, const std::string& format) {
    if (format == "json") return io::to_json(T).dump(2) + "\n";
    return io::to_text(T);
}

// Semistandard universe for a shape, or all shapes up to max_cells.
std::vector<ShiftedTableau> build_universe(const std::string& shape, int n, int max_cells) {
    std::vector<ShiftedTableau> out;
    if (!shape.empty()) return enumerate_all(parse_shape(shape), n);
    for (auto& sh : skew_shapes_up_to(max_cells)) {
        auto part = enumerate_all(sh, n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string content_id(const ShiftedTableau& T) {
    std::string key = T.shape().str() + "|" + io::to_text(T);
    std::ostringstream os;
    os << "t" << std::hex << std::hash<std::string>{}(key);
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shifted-tableau toolkit"};
    app.require_subcommand(1);

    std::string shape, word, format = "text", out_path, in_path, op, suite, kind, gens;
    std::string mu_s, nu_s;
    int n = 0, i = 0, j = 0, k = 0, max_cells = 7, power_bound = 200, jobs = 1;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--shape", shape, "outer[/inner], e.g. 5,3,1/2");
        c->add_option("--n", n, "alphabet size");
        c->add_option("--i", i);
        c->add_option("--j", j);
        c->add_option("--k", k);
        c->add_option("--word", word, "generator word, e.g. \"t1 t2 q2,4 s1,3\"");
        c->add_option("--format", format, "text|json|dot");
        c->add_option("--out", out_path, "output path (default stdout)");
        c->add_option("--max-cells", max_cells);
        c->add_option("--power-bound", power_bound);
        c->add_option("--jobs", jobs);
    };

    auto* c_compute = app.add_subcommand("compute", "apply one operation to a tableau");
    c_compute->add_option("--op", op,
                          "std|sstd|rect|complement|evac|evac-k|tilde-evac|tilde-evac-k|tilde-evac-ij|"
                          "reversal|eta|sigma|t|p|p-inv|q|q-ij|word");
    c_compute->add_option("--in", in_path, "tableau file (text or JSON), '-' for stdin");
    c_compute->add_option("--nu", nu_s, "weight composition for sstd, e.g. 2,4,1");
    add_common(c_compute);

    auto* c_enum = app.add_subcommand("enumerate", "stream the tableaux of a shape");
    add_common(c_enum);

    auto* c_verify = app.add_subcommand("verify", "run a relation suite");
    c_verify->add_option("--suite", suite, "bk-basic|bk-qjk|cactus-eta|sbk-counterexamples|braid-search");
    add_common(c_verify);

    auto* c_growth = app.add_subcommand("growth", "emit a growth diagram");
    c_growth->add_option("--kind", kind, "rect|infusion|evac|reversal|eta");
    c_growth->add_option("--in", in_path, "tableau file");
    c_growth->add_option("--filler", mu_s, "filler tableau file for rect/infusion/reversal/eta");
    add_common(c_growth);

    auto* c_orbit = app.add_subcommand("orbit", "functional graph of generators over a universe");
    c_orbit->add_option("--gens", gens, "comma-separated generator tokens, e.g. t1,t2");
    c_orbit->add_flag_callback("--dot", [&] { format = "dot"; });
    add_common(c_orbit);

    auto* c_lrcoef = app.add_subcommand("lrcoef", "shifted LR coefficient and its symmetry");
    c_lrcoef->add_option("--mu", mu_s);
    c_lrcoef->add_option("--nu", nu_s);
    add_common(c_lrcoef);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_compute->parsed()) {
            ShiftedTableau T = load_tableau(in_path, n);
            if (n == 0) n = T.n();
            ShiftedTableau R = T;
            if (op == "std") R = standardize(T);
            else if (op == "sstd") {
                std::vector<int> comp;
                std::stringstream ss(nu_s);
                std::string tok;
                while (std::getline(ss, tok, ',')) comp.push_back(std::stoi(tok));
                auto S = semistandardize(T, comp);
                if (!S) throw std::runtime_error("sstd undefined for this weight");
                R = *S;
            } else if (op == "rect") R = rect(T);
            else if (op == "complement") R = shtab::complement(T, n);
            else if (op == "evac") R = evac(T);
            else if (op == "evac-k") R = evac_k(T, k);
            else if (op == "tilde-evac") R = tilde_evac(T);
            else if (op == "tilde-evac-k") R = tilde_evac_k(T, k);
            else if (op == "tilde-evac-ij") R = tilde_evac_ij(T, i, j);
            else if (op == "reversal") R = reversal(T);
            else if (op == "eta") R = (i && j) ? eta_ij(T, i, j) : eta(T);
            else if (op == "sigma") R = sigma(T, i);
            else if (op == "t") R = t(T, i);
            else if (op == "p") R = promotion(T, i);
            else if (op == "p-inv") R = promotion_inv(T, i);
            else if (op == "q") R = q(T, i);
            else if (op == "q-ij") R = q_ij(T, i, j);
            else if (op == "word") R = evaluate(GeneratorWord::parse(word), T);
            else throw std::runtime_error("unknown --op '" + op + "'");
            emit(out_path, render(R, format));
        } else if (c_enum->parsed()) {
            if (shape.empty() || n == 0) throw std::runtime_error("enumerate needs --shape and --n");
            std::ostringstream os;
            if (format == "json") {
                json arr = json::array();
                for (auto& T : enumerate_all(parse_shape(shape), n)) arr.push_back(io::to_json(T));
                os << arr.dump(2) << "\n";
            } else {
                for (auto& T : enumerate_all(parse_shape(shape), n)) os << io::to_text(T) << "\n";
            }
            emit(out_path, os.str());
        } else if (c_verify->parsed()) {
            if (suite.empty()) throw std::runtime_error("verify needs --suite");
            std::vector<ShiftedTableau> universe;
            if (suite != "sbk-counterexamples") {
                if (n == 0) throw std::runtime_error("verify needs --n");
                universe = build_universe(shape, n, max_cells);
            }
            auto rep = verify_relations(universe, suite, power_bound);
            emit(out_path, io::report_to_json(rep).dump(2) + "\n");
            return rep.passed() ? 0 : 1;
        } else if (c_growth->parsed()) {
            ShiftedTableau T = load_tableau(in_path, n);
            GrowthGrid g;
            if (kind == "rect" || kind == "infusion") {
                ShiftedTableau S = mu_s.empty()
                    ? [&] {
                          StrictPartition inner = T.shape().inner;
                          std::map<Cell, Letter> e;
                          int v = 0;
                          for (auto& cell : inner.cells()) e[cell] = Letter(++v, false);
                          return ShiftedTableau(Filling(SkewShape{inner, StrictPartition()}, std::move(e)), v);
                      }()
                    : load_tableau(mu_s, 0);
                infusion_grid(S, T.is_standard() ? T : standardize(T), &g);
            } else if (kind == "evac") {
                g = evac_grid(T);
            } else if (kind == "reversal") {
                g = reversal_grid(T);
            } else if (kind == "eta") {
                g = eta_grid(T, i, j);
            } else {
                throw std::runtime_error("unknown --kind '" + kind + "'");
            }
            emit(out_path, format == "json" ? io::grid_to_json(g).dump(2) + "\n" : io::grid_to_text(g));
        } else if (c_orbit->parsed()) {
            if (shape.empty() || n == 0 || gens.empty())
                throw std::runtime_error("orbit needs --shape, --n and --gens");
            std::vector<std::pair<std::string, GeneratorWord>> gs;
            {
                std::stringstream ss(gens);
                std::string tok;
                while (std::getline(ss, tok, ',')) gs.push_back({tok, GeneratorWord::parse(tok)});
            }
            auto universe = enumerate_all(parse_shape(shape), n);
            std::ostringstream os;
            os << "digraph orbit {\n";
            for (auto& T : universe) {
                std::string rw = T.reading_word().str();
                os << "  " << content_id(T) << " [label=\"" << rw << "\"];\n";
            }
            for (auto& T : universe)
                for (auto& [name, gword] : gs)
                    os << "  " << content_id(T) << " -> " << content_id(evaluate(gword, T))
                       << " [label=\"" << name << "\"];\n";
            os << "}\n";
            emit(out_path, os.str());
        } else if (c_lrcoef->parsed()) {
            if (shape.empty()) throw std::runtime_error("lrcoef needs --shape (lambda)");
            auto lambda = parse_partition(shape);
            auto mu = parse_partition(mu_s);
            auto nu = parse_partition(nu_s);
            long long a = lr_coefficient(lambda, mu, nu);
            long long b = lr_coefficient(lambda, nu, mu);
            std::ostringstream os;
            os << "f[" << lambda.str() << "; (" << mu.str() << "),(" << nu.str() << ")] = " << a << "\n"
               << "f[" << lambda.str() << "; (" << nu.str() << "),(" << mu.str() << ")] = " << b << "\n"
               << "symmetry: " << (a == b ? "ok" : "VIOLATED") << "\n";
            emit(out_path, os.str());
            return a == b ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
