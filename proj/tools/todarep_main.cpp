// Command-line front end for the k / m / s / weight dictionary, fusion and
// minimal-model tables, necklace enumeration, and the radial Toda integrator.
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "todarep/fusion.hpp"
#include "todarep/json_io.hpp"
#include "todarep/minimal_models.hpp"
#include "todarep/rep_map.hpp"
#include "todarep/selfcheck.hpp"
#include "todarep/toda_ode.hpp"

namespace {

using nlohmann::json;
using namespace todarep;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& tok : split_commas(s)) out.push_back(rational_from_string(tok));
    return out;
}

DominantWeight parse_weight(const std::string& s) {
    DominantWeight out;
    for (const auto& tok : split_commas(s)) out.push_back(std::stoll(tok));
    return out;
}

std::vector<std::complex<double>> parse_complexes(const std::string& s) {
    // "re" or "re:im", comma-separated
    std::vector<std::complex<double>> out;
    for (const auto& tok : split_commas(s)) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            out.emplace_back(std::stod(tok), 0.0);
        else
            out.emplace_back(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
    }
    return out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << j.dump(2) << "\n";
    }
}

json poly_to_json(const std::vector<std::complex<double>>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(json{{"re", c.real()}, {"im", c.imag()}});
    return arr;
}

struct ConvertArgs {
    std::string from, to, k_str, m_str, s_str, v_str, in_file, out_file;
    int n = 0;
    std::string N_str;
    long long level = 0;
    bool tt_symmetric = false;
};

int run_convert(const ConvertArgs& a) {
    json in;
    if (!a.in_file.empty()) {
        std::ifstream f(a.in_file);
        if (!f) throw std::invalid_argument("cannot open input file: " + a.in_file);
        f >> in;
    }

    // Load the source into whichever of (k, m, s, weight) was named.
    std::optional<KParams> kp;
    std::optional<MParams> mp;
    std::optional<StokesParams> sp;
    std::optional<AffineDominantWeight> wt;
    if (a.from == "k") {
        kp = in.is_null() ? make_kparams(a.n, parse_rationals(a.k_str)) : kparams_from_json(in);
        if (a.tt_symmetric && !kp->symmetric())
            throw std::invalid_argument("exponents are not tt*-symmetric (k_i = k_{n-i+1})");
    } else if (a.from == "m") {
        mp = in.is_null() ? make_mparams(parse_rationals(a.m_str)) : mparams_from_json(in);
        if (a.tt_symmetric && !mp->tt_symmetric())
            throw std::invalid_argument("m is not tt*-symmetric (m_i + m_{n-i} = 0)");
    } else if (a.from == "s") {
        if (in.is_null()) {
            StokesParams s;
            s.s = parse_complexes(a.s_str);
            s.n = static_cast<int>(s.s.size());
            sp = s;
        } else {
            sp = stokes_from_json(in);
        }
    } else if (a.from == "weight") {
        wt = in.is_null() ? make_weight(a.n, parse_weight(a.v_str), a.level)
                          : weight_from_json(in);
    } else {
        throw std::invalid_argument("--from must be one of k, m, s, weight");
    }

    // Normalize towards exact m (plus N when known).
    std::optional<Rational> N;
    if (!a.N_str.empty()) N = rational_from_string(a.N_str);
    if (wt) {
        kp = k_from_weight(*wt);
        N = kp->N();
    }
    if (kp) {
        N = kp->N();
        mp = m_from_k(*kp);
    }
    if (sp && a.to != "s") {
        // numeric inversion; downstream targets need exact m, so only s->m is supported
        if (a.to != "m") throw std::invalid_argument("--from s supports only --to m");
        const auto m = m_from_stokes(*sp);
        json arr = json::array();
        for (double mi : m) arr.push_back(mi);
        emit(json{{"m_numeric", arr}}, a.out_file);
        return 0;
    }

    if (a.to == "k") {
        if (!mp) throw std::invalid_argument("no source for k");
        if (!kp) {
            if (!N) throw std::invalid_argument("--to k from m requires --N");
            kp = k_from_m(*mp, *N);
        }
        emit(to_json(*kp), a.out_file);
    } else if (a.to == "m") {
        if (!mp) throw std::invalid_argument("no source for m");
        emit(to_json(*mp), a.out_file);
    } else if (a.to == "s") {
        if (sp) {
            emit(to_json(*sp), a.out_file);
        } else {
            if (!mp) throw std::invalid_argument("no source for s");
            emit(to_json(stokes_from_m(*mp)), a.out_file);
        }
    } else if (a.to == "weight") {
        if (wt) {
            emit(to_json(*wt), a.out_file);
        } else if (kp) {
            emit(to_json(weight_from_k(*kp)), a.out_file);
        } else if (mp) {
            const auto cls = classify_m(*mp);
            if (!cls.representation)
                throw std::invalid_argument("m has no nonnegative-integer exponent realization");
            emit(to_json(*cls.representation), a.out_file);
        } else {
            throw std::invalid_argument("no source for weight");
        }
    } else {
        throw std::invalid_argument("--to must be one of k, m, s, weight");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"todarep: Toda exponents, Stokes parameters, affine weights, CFT data"};
    app.require_subcommand(1);

    ConvertArgs conv;
    auto* convert = app.add_subcommand("convert", "convert between k, m, s and (Lambda, level)");
    convert->add_option("--from", conv.from, "source: k|m|s|weight")->required();
    convert->add_option("--to", conv.to, "target: k|m|s|weight")->required();
    convert->add_option("--n", conv.n, "rank n");
    convert->add_option("--k", conv.k_str, "comma-separated k_0..k_n (rationals)");
    convert->add_option("--m", conv.m_str, "comma-separated m_0..m_n (rationals)");
    convert->add_option("--s", conv.s_str, "comma-separated s_1..s_n (re or re:im)");
    convert->add_option("--v", conv.v_str, "comma-separated weight coefficients v_1..v_n");
    convert->add_option("--level", conv.level, "weight level");
    convert->add_option("--N", conv.N_str, "total N (rational), for m -> k");
    convert->add_option("--in", conv.in_file, "read the source from a JSON file");
    convert->add_option("--out", conv.out_file, "write output JSON to a file");
    convert->add_flag("--tt-symmetric", conv.tt_symmetric, "assert tt*-symmetry of the input");

    std::string st_k, st_m, st_out;
    int st_n = 0;
    auto* stokes = app.add_subcommand("stokes", "Stokes parameters and characteristic polynomial");
    stokes->add_option("--n", st_n, "rank n")->required();
    stokes->add_option("--k", st_k, "comma-separated k_0..k_n");
    stokes->add_option("--m", st_m, "comma-separated m_0..m_n");
    stokes->add_option("--out", st_out, "output file");

    std::string w_k, w_v, w_out;
    int w_n = 0;
    long long w_level = 0;
    bool w_verify = false;
    auto* weight = app.add_subcommand("weight", "exponents <-> affine dominant weight");
    weight->add_option("--n", w_n, "rank n")->required();
    weight->add_option("--k", w_k, "comma-separated k_0..k_n (integers)");
    weight->add_option("--v", w_v, "comma-separated v_1..v_n");
    weight->add_option("--level", w_level, "level");
    weight->add_flag("--verify-theorem", w_verify, "check alcove membership and theta image");
    weight->add_option("--out", w_out, "output file");

    int f_n = 0;
    long long f_level = 0;
    std::string f_mu, f_out;
    bool f_ideal = false;
    auto* fusion = app.add_subcommand("fusion", "special elements and character table at level k");
    fusion->add_option("--n", f_n, "rank n")->required();
    fusion->add_option("--level", f_level, "level k")->required();
    fusion->add_option("--mu", f_mu, "dominant weight whose character to evaluate");
    fusion->add_flag("--ideal-test", f_ideal, "test fusion-ideal membership of --mu");
    fusion->add_option("--out", f_out, "output file");

    int mo_n = 0;
    long long mo_N = 0, mo_p = 0, mo_pp = 0;
    std::string mo_out, mo_csv;
    auto* model = app.add_subcommand("model", "minimal-model central charge and dimensions");
    model->add_option("--n", mo_n, "rank n")->required();
    model->add_option("--N", mo_N, "total N for the (n+1, N) model");
    model->add_option("--p", mo_p, "p for a general (p, p') model");
    model->add_option("--pprime", mo_pp, "p' for a general (p, p') model");
    model->add_option("--out", mo_out, "output file");
    model->add_option("--csv", mo_csv, "CSV export of (Lambda, h, c-24h) rows");

    int ne_n = 0;
    long long ne_N = 0;
    bool ne_count = false, ne_strings = false;
    std::string ne_out;
    auto* necklaces = app.add_subcommand("necklaces", "cyclic exponent strings of the (n+1, N) model");
    necklaces->add_option("--n", ne_n, "rank n")->required();
    necklaces->add_option("--N", ne_N, "total N")->required();
    necklaces->add_flag("--count", ne_count, "report only counts");
    necklaces->add_flag("--strings", ne_strings, "include operator strings");
    necklaces->add_option("--out", ne_out, "output file");

    std::string ode_m, ode_out;
    double ode_eps = 0.01, ode_rend = 1.0, ode_tol = 0.0;
    int ode_steps = 1024;
    auto* ode = app.add_subcommand("ode", "integrate the radial Toda system from t->0 data");
    ode->add_option("--m", ode_m, "comma-separated m_0..m_n (rationals)")->required();
    ode->add_option("--eps", ode_eps, "starting radius");
    ode->add_option("--r-end", ode_rend, "final radius");
    ode->add_option("--steps", ode_steps, "fixed RK4 step count");
    ode->add_option("--tol", ode_tol, "adaptive tolerance (overrides --steps)");
    ode->add_option("--out", ode_out, "CSV output file (JSON metadata sidecar .json)");

    unsigned sc_seed = 12345;
    auto* selfcheck = app.add_subcommand("selfcheck", "run the cross-module invariant suite");
    selfcheck->add_option("--seed", sc_seed, "random seed for property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (convert->parsed()) return run_convert(conv);

        if (stokes->parsed()) {
            MParams mp = st_k.empty() ? make_mparams(parse_rationals(st_m))
                                      : m_from_k(make_kparams(st_n, parse_rationals(st_k)));
            const auto s = stokes_from_m(mp);
            json out = to_json(s);
            out["char_poly"] = poly_to_json(char_poly_from_stokes(s));
            const auto st = polytope_status(mp);
            out["polytope"] = {{"member", st.member}, {"generic", st.generic},
                               {"symmetric", st.symmetric}};
            emit(out, st_out);
            return 0;
        }

        if (weight->parsed()) {
            if (!w_k.empty()) {
                const auto kp = make_kparams(w_n, parse_rationals(w_k));
                json out = to_json(weight_from_k(kp));
                if (w_verify) {
                    const auto chk = verify_main_theorem(kp);
                    out["alcove_ok"] = chk.alcove_ok;
                    out["theta_ok"] = chk.theta_ok;
                }
                emit(out, w_out);
            } else {
                const auto wgt = make_weight(w_n, parse_weight(w_v), w_level);
                emit(to_json(k_from_weight(wgt)), w_out);
            }
            return 0;
        }

        if (fusion->parsed()) {
            json table = json::array();
            const auto weights = enumerate_P_k(f_n, f_level);
            for (const auto& lam : weights) {
                const auto w = make_weight(f_n, lam, f_level);
                json row;
                row["Lambda"] = lam;
                row["zeta"] = cartan_to_json(zeta(w));
                row["t"] = to_json(special_element(w));
                if (!f_mu.empty()) {
                    const auto chi = character_value(parse_weight(f_mu), special_element(w));
                    row["chi_mu"] = {{"re", chi.real()}, {"im", chi.imag()}};
                }
                table.push_back(std::move(row));
            }
            json out{{"n", f_n}, {"level", f_level}, {"table", table}};
            if (f_ideal) {
                if (f_mu.empty()) throw std::invalid_argument("--ideal-test requires --mu");
                out["in_fusion_ideal"] = in_fusion_ideal(parse_weight(f_mu), f_n, f_level);
            }
            emit(out, f_out);
            return 0;
        }

        if (model->parsed()) {
            if (mo_p > 0 || mo_pp > 0) {
                const auto spec = make_model(mo_n, mo_p, mo_pp);
                emit(json{{"c", rational_to_string(central_charge(spec))}}, mo_out);
                return 0;
            }
            if (mo_N <= mo_n + 1) throw std::invalid_argument("model: need --N > n+1 or --p/--pprime");
            const Rational c = fn_central_charge(mo_n, mo_N);
            json primaries = json::array();
            std::ostringstream csv;
            csv << "Lambda,h,c_minus_24h\n";
            for (const auto& rep : enumerate_primaries(mo_n, mo_N)) {
                const DominantWeight lam(rep.k.begin() + 1, rep.k.end());
                const auto h = fn_conformal_dim(mo_n, mo_N, lam);
                std::vector<Rational> kr(rep.k.begin(), rep.k.end());
                const auto m = m_from_k(KParams{mo_n, kr});
                primaries.push_back(json{
                    {"kstring", rep.k},
                    {"Lambda", lam},
                    {"h", rational_to_string(h.h_general)},
                    {"mu", rational_to_string(mu(m, Rational(mo_N)))},
                });
                std::string lam_str;
                for (size_t i = 0; i < lam.size(); ++i)
                    lam_str += (i ? " " : "") + std::to_string(lam[i]);
                csv << '"' << lam_str << '"' << ',' << rational_to_string(h.h_general) << ','
                    << rational_to_string(c - 24 * h.h_general) << "\n";
            }
            json out{{"n", mo_n},
                     {"N", mo_N},
                     {"c", rational_to_string(c)},
                     {"nonunitary_h_nonpositive", nonunitarity_scan(mo_n, mo_N)},
                     {"primaries", primaries}};
            if (!mo_csv.empty()) {
                std::ofstream f(mo_csv);
                if (!f) throw std::invalid_argument("cannot open CSV file: " + mo_csv);
                f << csv.str();
            }
            emit(out, mo_out);
            return 0;
        }

        if (necklaces->parsed()) {
            const auto count = necklace_count(ne_n, ne_N);
            json out{{"enumerated", count.enumerated},
                     {"formula", rational_to_string(count.formula)},
                     {"formula_applicable", count.formula_applicable}};
            if (!ne_count) {
                json reps = json::array();
                for (const auto& rep : enumerate_primaries(ne_n, ne_N)) {
                    json row{{"kstring", rep.k}};
                    if (ne_strings) row["operator_string"] = operator_string(rep, 0).tokens;
                    reps.push_back(std::move(row));
                }
                out["representatives"] = reps;
            }
            emit(out, ne_out);
            return 0;
        }

        if (ode->parsed()) {
            const MParams mp = make_mparams(parse_rationals(ode_m));
            const auto s0 = init_asymptotic(mp, ode_eps);
            const StepPolicy policy = ode_tol > 0.0 ? StepPolicy::adaptive(ode_tol)
                                                    : StepPolicy::fixed_steps(ode_steps);
            std::vector<double> m_used;
            for (const auto& mi : mp.m.h) m_used.push_back(to_double(mi));
            const auto traj = integrate(s0, ode_rend, policy, m_used);

            std::ostream* outp = &std::cout;
            std::ofstream file;
            if (!ode_out.empty()) {
                file.open(ode_out);
                if (!file) throw std::invalid_argument("cannot open CSV file: " + ode_out);
                outp = &file;
            }
            const size_t len = mp.m.h.size();
            *outp << "r";
            for (size_t i = 0; i < len; ++i) *outp << ",w" << i;
            for (size_t i = 0; i < len; ++i) *outp << ",wp" << i;
            *outp << "\n";
            outp->precision(15);
            for (const auto& s : traj.samples) {
                *outp << s.r;
                for (double wi : s.w) *outp << "," << wi;
                for (double pi : s.wprime) *outp << "," << pi;
                *outp << "\n";
            }
            json meta{{"m", json::array()},
                      {"policy", traj.policy},
                      {"blew_up", traj.blew_up},
                      {"last_valid_r", traj.last_valid_r}};
            for (const auto& mi : mp.m.h) meta["m"].push_back(rational_to_string(mi));
            if (!ode_out.empty()) {
                std::ofstream mf(ode_out + ".json");
                mf << meta.dump(2) << "\n";
            } else {
                std::cerr << meta.dump(2) << "\n";
            }
            return 0;
        }

        if (selfcheck->parsed())
            return run_selfcheck(std::cout, sc_seed) ? 0 : 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
