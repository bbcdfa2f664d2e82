#include "qhnf/cli.hpp"

#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "qhnf/serialize.hpp"

namespace qhnf::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

// Human format: the JSON report laid out as indented "key: value" lines.
void render_human(const json& j, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_object()) {
            out << pad << it.key() << ":\n";
            render_human(v, out, indent + 2);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << pad << it.key() << ":\n";
            for (const json& item : v) {
                std::ostringstream row;
                bool first = true;
                for (auto f = item.begin(); f != item.end(); ++f) {
                    row << (first ? "" : ", ") << f.key() << "=" << (f.value().is_array() ? f.value().dump() : scalar(f.value()));
                    first = false;
                }
                out << pad << "  - " << row.str() << "\n";
            }
        } else if (v.is_array()) {
            std::string joined;
            for (const json& x : v) joined += (joined.empty() ? "" : ", ") + scalar(x);
            out << pad << it.key() << ": [" << joined << "]\n";
        } else {
            out << pad << it.key() << ": " << scalar(v) << "\n";
        }
    }
}

void emit(const RunConfig& cfg, const json& report, std::ostream& out) {
    if (cfg.format == "json") {
        out << report.dump(2) << "\n";
    } else {
        render_human(report, out);
    }
}

template <ExactField F>
FormInput<F> load_form(const RunConfig& cfg) {
    if (!cfg.input.empty()) {
        if (cfg.a || cfg.b) throw UsageError("--input cannot be combined with --a/--b");
        return read_form_file<F>(cfg.input);
    }
    if (!cfg.a || !cfg.b) throw UsageError("a form is required: --input FILE or --a TEXT --b TEXT");
    if (!cfg.k || !cfg.l) throw UsageError("--k and --l are required with --a/--b");
    json j{{"k", *cfg.k}, {"l", *cfg.l}, {"a", *cfg.a}, {"b", *cfg.b}};
    if (cfg.eps0) j["epsilon0"] = *cfg.eps0;
    if (cfg.eps_inf) j["epsilonInf"] = *cfg.eps_inf;
    return form_from_json<F>(j);
}

FoliationType type_from_flags(const RunConfig& cfg, int default_n = 0) {
    if (!cfg.k || !cfg.l) throw UsageError("--k and --l are required");
    if (!cfg.n && default_n == 0) throw UsageError("--n is required");
    try {
        return FoliationType::make(*cfg.k, *cfg.l, cfg.n.value_or(default_n), cfg.eps0.value_or(1), cfg.eps_inf.value_or(1));
    } catch (const NotCoprime& e) {
        throw UsageError(e.what());
    }
}

json membership_json(const std::vector<Condition>& conditions) {
    json arr = json::array();
    for (const Condition& c : conditions) {
        json e{{"name", c.name}, {"verdict", verdict_name(c.verdict)}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (c.informational) e["informational"] = true;
        arr.push_back(e);
    }
    return arr;
}

template <ExactField F>
json genericity_json(const GenericityReport<F>& g) {
    json degrees = json::array();
    for (const GenericityEntry& e : g.degrees) {
        degrees.push_back(json{{"m", e.m}, {"e", e.e}, {"hamiltonian", e.hamiltonian_ok}, {"radial", e.radial_ok}});
    }
    json indices = json::object();
    for (const auto& [name, v] : g.indices) indices[name] = v.to_string();
    return json{{"degrees", degrees}, {"indices", indices}, {"systemsInvertible", g.systems_ok()},
                {"indicesIrrational", g.indices_irrational()}, {"generic", g.generic()}};
}

/// Type inference and membership; returns the report or prints the failure.
template <ExactField F>
std::optional<MembershipReport<F>> classify(const Jet<F>& jet, int eps0, int eps_inf, json& report, std::ostream& err) {
    FoliationType t;
    try {
        t = infer_type(jet, eps0, eps_inf);
    } catch (const NotInClass& e) {
        report["inClass"] = false;
        report["failure"] = e.what();
        err << "error: " << e.what() << "\n";
        return std::nullopt;
    }
    MembershipReport<F> rep = verify_membership(jet, t);
    report["type"] = type_to_json(t);
    report["conditions"] = membership_json(rep.conditions);
    report["inClass"] = rep.in_class();
    if (const Condition* bad = rep.first_failure()) {
        report["failure"] = bad->name;
        err << "error: form is not in the class: condition " << bad->name << " fails"
            << (bad->detail.empty() ? "" : " (" + bad->detail + ")") << "\n";
        return std::nullopt;
    }
    return rep;
}

template <ExactField F>
int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const FormInput<F> in = load_form<F>(cfg);
    const Jet<F> jet = in.jet();
    json r{{"command", "analyze"}, {"field", cfg.field}};
    const auto rep = classify(jet, in.eps0, in.eps_inf, r, err);
    if (!rep) {
        emit(cfg, r, out);
        return kNotInClass;
    }
    const FoliationType& t = rep->type;
    const SpectralData<F>& s = *rep->spectral;
    r["spectral"] = spectral_to_json(s);

    // The same indices read off the blown-up form by residues.
    const OneForm<F> wd = jet.component(t.d());
    json pts = json::array();
    F sum(0);
    bool agree = true;
    for (const auto& p : singular_points_principal(t, s)) {
        const F idx = principal_index(wd, t.w, p);
        sum += idx;
        std::string where;
        F expected;
        switch (p.kind) {
            case PrincipalPoint<F>::Kind::zero: where = "0"; expected = s.lambda0; break;
            case PrincipalPoint<F>::Kind::infinity: where = "infinity"; expected = s.lambda_inf; break;
            default: where = p.coordinate.to_string(); expected = s.lambda[p.branch_index];
        }
        agree = agree && idx == expected;
        pts.push_back(json{{"point", where}, {"index", idx.to_string()}});
    }
    r["residues"] = json{{"points", pts}, {"sum", sum.to_string()}, {"matchSpectral", agree}};
    if (t.eps0 && t.eps_inf) r["genericity"] = genericity_json(genericity_report(t, wd));
    emit(cfg, r, out);
    return kOk;
}

template <ExactField F>
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const FormInput<F> in = load_form<F>(cfg);
    json r{{"command", "verify"}, {"field", cfg.field}};
    const auto rep = classify(in.jet(), in.eps0, in.eps_inf, r, err);
    emit(cfg, r, out);
    return rep ? kOk : kNotInClass;
}

long require_degree(const RunConfig& cfg) {
    if (!cfg.degree) throw UsageError("--degree is required");
    if (*cfg.degree < 1) throw UsageError("--degree must be at least 1");
    return *cfg.degree;
}

template <ExactField F>
int normalize_jet(const RunConfig& cfg, const Jet<F>& jet, long D, json& r, std::ostream& out, std::ostream& err,
                  const NormalForm<F>* expected = nullptr) {
    const auto rep = classify(jet, 1, 1, r, err);
    if (!rep) {
        emit(cfg, r, out);
        return kNotInClass;
    }
    const FoliationType& t = rep->type;
    const GenericityReport<F> g = genericity_report(t, jet.component(t.d()));
    if (!g.generic()) {
        r["genericity"] = genericity_json(g);
        emit(cfg, r, out);
        err << "error: the form is not generic; the normal form is not defined\n";
        return kNonGeneric;
    }
    const NormalizeResult<F> res = normalize(jet, D);
    r["normalForm"] = normal_form_to_json(res.normal_form);
    r["gauge"] = gauge_to_json(res.gauge, t.w.k, t.w.l);
    r["certificate"] = res.certificate_ok;
    bool ok = res.certificate_ok;
    if (expected) {
        const bool same = res.normal_form == *expected;
        r["roundTrip"] = same;
        ok = ok && same;
    }
    emit(cfg, r, out);
    if (!res.certificate_ok) err << "error: gauge certificate does not reproduce the output\n";
    return ok ? kOk : kInternal;
}

template <ExactField F>
int run_normalize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const long D = require_degree(cfg);
    json r{{"command", "normalize"}, {"field", cfg.field}, {"degree", D}};
    const FormInput<F> in = load_form<F>(cfg);
    if (!in.eps0 || !in.eps_inf) throw AxisRequired();
    const Jet<F> probe = in.jet();
    const long d = infer_type(probe, 1, 1).d();
    if (in.dmax && *in.dmax < d + D) {
        throw TruncationTooSmall("declared precision " + std::to_string(*in.dmax) + " is below d + D = " + std::to_string(d + D));
    }
    return normalize_jet(cfg, in.jet(d + D), D, r, out, err);
}

// Seeded round trip: random normal form, random strict gauge, normalize.
int run_normalize_seeded(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const long D = require_degree(cfg);
    if (cfg.field != "Qt") throw UsageError("seeded normalization draws indices in Q(t); use --field Qt");
    const FoliationType t = type_from_flags(cfg);
    const unsigned long seed = *cfg.seed;
    json r{{"command", "normalize"}, {"field", cfg.field}, {"degree", D}, {"seed", seed}};
    const NormalForm<RatFunc> nf = random_normal_form(t, D, seed);
    r["seedNormalForm"] = normal_form_to_json(nf);
    const Jet<RatFunc> jet = perturb_random(nf, seed, D);
    return normalize_jet(cfg, jet, D, r, out, err, &nf);
}

template <ExactField F>
int run_decompose(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const FormInput<F> in = load_form<F>(cfg);
    const Jet<F> jet = in.jet();
    const HSDecomposition<F> hs = decompose_hs(jet);
    json r{{"command", "decompose"}, {"field", cfg.field}, {"k", in.w.k}, {"l", in.w.l}, {"Dmax", jet.dmax()},
           {"h", hs.h.to_string(in.w.k, in.w.l)}, {"s", hs.s.to_string(in.w.k, in.w.l)}};
    emit(cfg, r, out);
    return kOk;
}

int run_counts(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    FoliationType t = type_from_flags(cfg);
    t.eps0 = t.eps_inf = 1;
    const int k = t.w.k, l = t.w.l;
    json rows = json::array();
    for (long m = 0; m < t.kln(); ++m) {
        const long e = e_count(k, l, m), shifted = e_count(k, l, t.kln() + m);
        rows.push_back(json{{"m", m}, {"e", e}, {"eShifted", shifted}, {"hSlots", m == 0 ? 0 : shifted - 2 * e}});
    }
    const Dims dd = dims(t);
    json r{{"command", "counts"}, {"k", k}, {"l", l}, {"n", t.n}, {"u", t.w.u}, {"v", t.w.v}, {"table", rows},
           {"deltaPrime", dd.delta_prime}, {"delta", dd.delta}, {"difference", dd.delta - dd.delta_prime}};
    emit(cfg, r, out);
    return kOk;
}

template <ExactField F>
int run_pullback(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const FormInput<F> in = load_form<F>(cfg);
    json r{{"command", "pullback"}, {"field", cfg.field}, {"chart", cfg.chart}};
    FactoredPullback<F> pb;
    MonomialMap m;
    if (cfg.chart == "principal") {
        m = principal_chart(in.w);
    } else if (cfg.chart == "opposite") {
        m = opposite_chart(in.w);
    } else if (cfg.chart == "previous") {
        m = previous_chart(in.w);
    } else if (cfg.chart == "blowup0") {
        m = MonomialMap{1, 0, 1, 1};
    } else if (cfg.chart == "blowupInf") {
        m = MonomialMap{1, 1, 0, 1};
    } else {
        throw UsageError("unknown chart " + cfg.chart);
    }
    pb = pullback_monomial(in.form, m);
    r["map"] = json::array({m.A, m.B, m.C, m.D});
    r["pullback"] = pullback_to_json(pb);
    emit(cfg, r, out);
    return kOk;
}

int run_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunConfig defaults = cfg;
    if (!defaults.k && !defaults.l) {
        defaults.k = 3;
        defaults.l = 2;
    }
    const FoliationType t = type_from_flags(defaults, 1);
    const long D = cfg.degree.value_or(t.kln() + 3);
    const unsigned long seed = cfg.seed.value_or(1);
    json checks = json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool ok) {
        checks.push_back(json{{"check", name}, {"pass", ok}});
        all = all && ok;
    };

    bool counts = true;
    for (long m = 0; m <= 60; ++m) {
        long brute = 0;
        for (long i = 0; t.w.k * i <= m; ++i) brute += (m - t.w.k * i) % t.w.l == 0;
        counts = counts && brute == e_count(t.w.k, t.w.l, m);
    }
    record("latticeCount", counts);
    const Dims dd = dims(t);
    record("dimensionGap", dd.delta - dd.delta_prime == t.n - 1 &&
                               dd.delta_prime == static_cast<long>(hamiltonian_box(t.w.k, t.w.l, t.n).size()));

    const NormalForm<RatFunc> nf = random_normal_form(t, D, seed);
    const OneForm<RatFunc> wd = build_omega_d(t, nf.spec);
    record("spectralRoundTrip", recover_spectral(t, wd) == nf.spec);
    const auto res = normalize(perturb_random(nf, seed, D), D);
    record("certificate", res.certificate_ok);
    record("normalFormRoundTrip", res.normal_form == nf);

    json r{{"command", "selftest"}, {"type", type_to_json(t)}, {"degree", D}, {"seed", seed}, {"checks", checks}, {"pass", all}};
    emit(cfg, r, out);
    if (!all) err << "error: self-test failed\n";
    return all ? kOk : kInternal;
}

template <ExactField F>
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string& c = cfg.command;
    if (c == "analyze") return run_analyze<F>(cfg, out, err);
    if (c == "verify") return run_verify<F>(cfg, out, err);
    if (c == "normalize") {
        const bool has_form = !cfg.input.empty() || cfg.a || cfg.b;
        if (!has_form && cfg.seed) return run_normalize_seeded(cfg, out, err);
        return run_normalize<F>(cfg, out, err);
    }
    if (c == "decompose") return run_decompose<F>(cfg, out, err);
    if (c == "counts") return run_counts(cfg, out, err);
    if (c == "pullback") return run_pullback<F>(cfg, out, err);
    if (c == "selftest") return run_selftest(cfg, out, err);
    throw UsageError("unknown command " + c);
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.field == "Q") return dispatch<Rational>(cfg, out, err);
        if (cfg.field == "Qt") return dispatch<RatFunc>(cfg, out, err);
        throw UsageError("unknown field " + cfg.field + " (expected Q or Qt)");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TruncationTooSmall& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const NonGeneric& e) {
        err << "error: " << e.what() << "\n";
        return kNonGeneric;
    } catch (const NonGenericRadial& e) {
        err << "error: " << e.what() << "\n";
        return kNonGeneric;
    } catch (const NotInClass& e) {
        err << "error: " << e.what() << "\n";
        return kNotInClass;
    } catch (const AxisRequired& e) {
        err << "error: " << e.what() << "\n";
        return kNotInClass;
    } catch (const DegenerateBranches& e) {
        err << "error: " << e.what() << "\n";
        return kNotInClass;
    } catch (const NotFactoredOverField& e) {
        err << "error: " << e.what() << "\n";
        return kNotInClass;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strict formal normal forms of quasi-homogeneous foliations", "qhnf"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "weight of x")->check(CLI::PositiveNumber);
        sub->add_option("--l", cfg.l, "weight of y")->check(CLI::PositiveNumber);
        sub->add_option("--n", cfg.n, "number of cuspidal branches")->check(CLI::PositiveNumber);
        sub->add_option("--epsilon0", cfg.eps0, "power of x in the initial contraction (0 or 1; detected when omitted)")->check(CLI::Range(0, 1));
        sub->add_option("--epsilonInf", cfg.eps_inf, "power of y in the initial contraction (0 or 1; detected when omitted)")->check(CLI::Range(0, 1));
        sub->add_option("--degree", cfg.degree, "degree budget D above the initial degree");
        sub->add_option("--field", cfg.field, "coefficient field")
            ->transform(CLI::IsMember({"Q", "Qt", "rationals", "rational-functions"}))
            ->each([&cfg](const std::string& v) {
                if (v == "rationals") cfg.field = "Q";
                if (v == "rational-functions") cfg.field = "Qt";
            });
        sub->add_option("--seed", cfg.seed, "seed for random data");
        sub->add_option("--input", cfg.input, "JSON form file")->check(CLI::ExistingFile);
        sub->add_option("--a", cfg.a, "dx coefficient");
        sub->add_option("--b", cfg.b, "dy coefficient");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"human", "json"}));
    };

    const std::vector<std::pair<std::string, std::string>> commands{
        {"analyze", "class membership, spectral data, residues and genericity"},
        {"normalize", "strict normal form with its gauge certificate"},
        {"decompose", "hamiltonian/radial decomposition of a jet"},
        {"counts", "lattice counts and moduli dimensions"},
        {"pullback", "pullback through a monomial chart"},
        {"verify", "class membership report"},
        {"selftest", "seeded consistency checks"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub);
        if (name == "pullback") {
            sub->add_option("--chart", cfg.chart, "principal | opposite | previous | blowup0 | blowupInf")
                ->check(CLI::IsMember({"principal", "opposite", "previous", "blowup0", "blowupInf"}));
        }
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    return execute(cfg, out, err);
}

}  // namespace qhnf::cli
