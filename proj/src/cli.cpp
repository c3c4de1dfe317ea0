#include "qrtecm/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <sstream>

#include "qrtecm/bench.hpp"
#include "qrtecm/birational.hpp"
#include "qrtecm/ecm.hpp"
#include "qrtecm/sequences.hpp"

namespace qrtecm::cli {

namespace {

using nlohmann::json;

std::string rat_str(const mpq_class& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

json curve_to_json(const CurveParams& params) {
    json fields = std::visit(
        [](const auto& c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, LynessCurve>)
                return json{{"a", c.a.value().get_str()},
                            {"b", c.b.value().get_str()},
                            {"K", c.k.value().get_str()}};
            else if constexpr (std::is_same_v<T, Somos5Curve>)
                return json{{"alpha", c.alpha.value().get_str()},
                            {"beta", c.beta.value().get_str()},
                            {"J", c.j.value().get_str()}};
            else
                return json{{"alpha", c.alpha.value().get_str()},
                            {"beta", c.beta.value().get_str()},
                            {"J", c.j.value().get_str()}};
        },
        params);
    return json{{"family", family_name(family_of(params))},
                {"params", std::move(fields)},
                {"modulus", curve_modulus(params).value().get_str()}};
}

std::vector<mpz_class> parse_integer_list(const std::string& csv) {
    std::vector<mpz_class> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_integer(item));
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
    return out;
}

void emit(std::ostream& out, const json& line) { out << line.dump() << "\n"; }

// ---- factor -------------------------------------------------------------

struct FactorOpts {
    std::string n;
    std::string family = "lyness";
    std::uint64_t b1 = 1000;
    unsigned trials = 20;
    std::uint64_t seed = 1;
    std::string pipeline = "affine";
    std::string exponent_mode = "product";
    int threads = 1;
    std::string fixed_params;
    std::string fixed_s;
    bool chain_trace = false;
    bool as_json = false;
    bool quiet = false;
};

int run_factor(const FactorOpts& opt, std::ostream& out, std::ostream& err) {
    mpz_class n = parse_integer(opt.n);
    if (n < 2) {
        err << "factor: n must be >= 2\n";
        return 1;
    }
    EcmConfig cfg;
    cfg.family = family_from_name(opt.family);
    cfg.b1 = opt.b1;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.pipeline = pipeline_from_name(opt.pipeline);
    cfg.threads = opt.threads;
    if (opt.exponent_mode == "product") cfg.exponent_mode = ExponentMode::product;
    else if (opt.exponent_mode == "single") cfg.exponent_mode = ExponentMode::single;
    else {
        err << "factor: --exponent-mode must be product or single\n";
        return 1;
    }
    if (cfg.pipeline == Pipeline::projective && cfg.family != Family::lyness) {
        err << "factor: the projective pipeline requires --family lyness\n";
        return 1;
    }
    if (cfg.b1 < 2) {
        err << "factor: --b1 must be >= 2\n";
        return 1;
    }
    if (!opt.fixed_params.empty()) {
        auto vals = parse_integer_list(opt.fixed_params);
        if (vals.size() != 3) {
            err << "factor: --fixed-params needs exactly three integers\n";
            return 1;
        }
        cfg.fixed_params = std::array<mpz_class, 3>{vals[0], vals[1], vals[2]};
    }
    if (!opt.fixed_s.empty()) {
        mpz_class s = parse_integer(opt.fixed_s);
        if (s < family_base(cfg.family)) {
            err << "factor: --s must be >= the family base index\n";
            return 1;
        }
        cfg.fixed_s = s;
    }

    if (opt.chain_trace) {
        mpz_class s = cfg.fixed_s ? *cfg.fixed_s : stage1_exponent(cfg.b1, cfg.exponent_mode);
        unsigned base = family_base(cfg.family);
        if (s < base) s = base;
        Chain chain = build_chain(s, base);
        mpz_class index = base;
        if (opt.as_json)
            emit(out, json{{"type", "chain"}, {"step", -1}, {"op", "init"},
                           {"index", index.get_str()}});
        else
            out << "chain init at " << index.get_str() << "\n";
        for (std::size_t i = 0; i < chain.ops.size(); ++i) {
            bool is_add = chain.ops[i] == ChainOp::add;
            if (is_add) index += 1;
            else index *= 2;
            if (opt.as_json)
                emit(out, json{{"type", "chain"}, {"step", static_cast<long>(i)},
                               {"op", is_add ? "add" : "double"}, {"index", index.get_str()}});
            else
                out << "chain step " << i << ": " << (is_add ? "add" : "double") << " -> "
                    << index.get_str() << "\n";
        }
    }

    TrialSink sink;
    if (!opt.quiet) {
        sink = [&](const mpz_class& target, long trial, const CurveParams& params,
                   const EcmOutcome& oc) {
            if (opt.as_json) {
                json line{{"type", "trial"},
                          {"n", target.get_str()},
                          {"trial", trial},
                          {"status", ecm_status_name(oc.status)},
                          {"step", static_cast<long>(oc.step)},
                          {"curve", curve_to_json(params)}};
                if (oc.status == EcmOutcome::Status::found) line["factor"] = oc.factor.get_str();
                emit(out, line);
            } else if (oc.status == EcmOutcome::Status::found) {
                out << "trial " << trial << " on " << target.get_str() << ": factor "
                    << oc.factor.get_str() << " at step " << oc.step << "\n";
            }
        };
    }

    auto t0 = std::chrono::steady_clock::now();
    FactorReport report = factorize(n, cfg, sink);
    double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    bool found = report.found_split || report.complete;
    json factors = json::array();
    for (const auto& entry : report.factors)
        factors.push_back(json{{"factor", entry.factor.get_str()},
                               {"multiplicity", entry.multiplicity},
                               {"prime", entry.prime}});
    json line{{"type", "report"},
              {"n", n.get_str()},
              {"status", found ? "found" : "no_factor"},
              {"factor", report.found_split ? json(report.first_split.factor.get_str()) : json()},
              {"cofactor",
               report.found_split ? json(report.first_split.cofactor.get_str()) : json()},
              {"trial", report.found_split ? report.first_split.trial : -1},
              {"step", report.found_split ? static_cast<long>(report.first_split.step) : -1},
              {"m_count", report.ops.m},
              {"b_count", report.ops.b},
              {"elapsed_ms", elapsed_ms},
              {"complete", report.complete},
              {"trials", report.trials_run},
              {"factors", factors}};
    if (!report.complete) line["unfactored"] = report.unfactored.get_str();
    if (opt.as_json) {
        emit(out, line);
    } else {
        out << n.get_str() << ": " << (found ? "found" : "no factor") << "\n";
        for (const auto& entry : report.factors)
            out << "  " << entry.factor.get_str() << "^" << entry.multiplicity
                << (entry.prime ? " (probable prime)" : " (composite)") << "\n";
        if (!report.complete)
            out << "  unfactored composite: " << report.unfactored.get_str() << "\n";
        out << "  trials " << report.trials_run << ", m_count " << report.ops.m << ", b_count "
            << report.ops.b << ", elapsed " << std::fixed << std::setprecision(1) << elapsed_ms
            << " ms\n";
    }
    return found ? 0 : 2;
}

// ---- bench --------------------------------------------------------------

struct BenchOpts {
    unsigned bits = 64;
    std::size_t scalars = 100;
    std::uint64_t seed = 1;
    bool as_json = false;
    bool quiet = false;
};

int run_bench(const BenchOpts& opt, std::ostream& out, std::ostream&) {
    auto rows = bench_scalars(opt.bits, opt.scalars, opt.seed);
    OpCounter lyness_total;
    std::uint64_t adds = 0, doubles = 0;
    for (const auto& row : rows) {
        lyness_total += row.add_ops;
        lyness_total += row.double_ops;
        adds += row.adds;
        doubles += row.doubles;
        if (opt.as_json && !opt.quiet) {
            emit(out, json{{"type", "op"}, {"scalar", row.scalar_index}, {"op", "add"},
                           {"count", row.adds}, {"M", row.add_ops.m}, {"S", row.add_ops.s},
                           {"B", row.add_ops.b}, {"bits", row.bits}});
            emit(out, json{{"type", "op"}, {"scalar", row.scalar_index}, {"op", "double"},
                           {"count", row.doubles}, {"M", row.double_ops.m},
                           {"S", row.double_ops.s}, {"B", row.double_ops.b}, {"bits", row.bits}});
        }
    }
    EdwardsCostModel edwards = EdwardsCostModel::tally(adds, doubles);
    double ratio = edwards.m == 0 ? 0.0
                                  : static_cast<double>(lyness_total.m) /
                                        static_cast<double>(edwards.m);
    if (opt.as_json) {
        emit(out, json{{"type", "summary"}, {"side", "lyness"}, {"M", lyness_total.m},
                       {"S", lyness_total.s}, {"B", lyness_total.b}, {"adds", adds},
                       {"doubles", doubles}, {"bits", opt.bits}, {"scalars", opt.scalars}});
        emit(out, json{{"type", "summary"}, {"side", "edwards_model"}, {"M", edwards.m},
                       {"S", edwards.s}, {"A", edwards.by_a}, {"D", edwards.by_d},
                       {"bits", opt.bits}, {"scalars", opt.scalars}});
        emit(out, json{{"type", "summary"}, {"side", "ratio"}, {"lyness_m", lyness_total.m},
                       {"edwards_m", edwards.m}, {"m_ratio", ratio}});
    } else {
        out << "scalars " << opt.scalars << " x " << opt.bits << " bits: " << adds << " adds, "
            << doubles << " doubles\n";
        out << "lyness        M=" << lyness_total.m << " S=" << lyness_total.s
            << " B=" << lyness_total.b << "\n";
        out << "edwards model M=" << edwards.m << " S=" << edwards.s << " A=" << edwards.by_a
            << " D=" << edwards.by_d << "\n";
        out << "multiplication ratio " << std::fixed << std::setprecision(3) << ratio << "\n";
    }
    return 0;
}

// ---- sequence -----------------------------------------------------------

struct SequenceOpts {
    std::string kind = "somos4";
    std::string coeffs;
    std::string init;
    long terms = 20;
    std::string mod;
    long first_index = 0;
    bool as_json = false;
};

SomosKind somos_kind_from_name(const std::string& name) {
    if (name == "somos4") return SomosKind::somos4;
    if (name == "somos5") return SomosKind::somos5;
    if (name == "somos7") return SomosKind::somos7;
    throw CLI::ValidationError("--kind must be somos4, somos5 or somos7");
}

template <class Elem, class Make>
int emit_sequence(const SequenceOpts& opt, SomosKind kind, const std::vector<mpz_class>& coeffs,
                  const std::vector<mpz_class>& init, Make make, std::ostream& out,
                  std::ostream& err) {
    std::vector<Elem> initial;
    for (const auto& v : init) initial.push_back(make(v));
    SomosSequence<Elem> seq(kind, make(coeffs[0]), make(coeffs[1]), std::move(initial),
                            opt.first_index);
    long last = opt.first_index + opt.terms - 1;
    try {
        seq.extend_to(last);
    } catch (const std::exception& e) {
        err << "sequence: extension failed: " << e.what() << "\n";
        return 1;
    }
    for (long n = opt.first_index; n <= last; ++n) {
        std::string text;
        if constexpr (std::is_same_v<Elem, mpq_class>) text = rat_str(seq.term(n));
        else text = seq.term(n).value().get_str();
        if (opt.as_json) emit(out, json{{"type", "term"}, {"n", n}, {"tau", text}});
        else out << text << "\n";
    }
    return 0;
}

int run_sequence(const SequenceOpts& opt, std::ostream& out, std::ostream& err) {
    SomosKind kind = somos_kind_from_name(opt.kind);
    auto coeffs = parse_integer_list(opt.coeffs);
    auto init = parse_integer_list(opt.init);
    if (coeffs.size() != 2) {
        err << "sequence: --coeffs needs exactly two integers\n";
        return 1;
    }
    if (init.size() != somos_order(kind)) {
        err << "sequence: --init needs exactly " << somos_order(kind) << " terms for "
            << opt.kind << "\n";
        return 1;
    }
    if (opt.terms < static_cast<long>(init.size())) {
        err << "sequence: --terms must cover the initial terms\n";
        return 1;
    }
    if (opt.mod.empty())
        return emit_sequence<mpq_class>(opt, kind, coeffs, init,
                                        [](const mpz_class& v) { return mpq_class(v); }, out, err);
    Modulus n(parse_integer(opt.mod));
    return emit_sequence<Residue>(opt, kind, coeffs, init,
                                  [&](const mpz_class& v) { return Residue(v, n); }, out, err);
}

// ---- prng ---------------------------------------------------------------

struct PrngOpts {
    std::string mod;
    std::string q = "1";
    std::string b_table;
    std::uint64_t seed = 1;
    std::size_t count = 16;
    bool hex = false;
    bool as_json = false;
};

int run_prng(const PrngOpts& opt, std::ostream& out, std::ostream& err) {
    Modulus n(parse_integer(opt.mod));
    mpz_class q = parse_integer(opt.q);
    auto b_table = parse_integer_list(opt.b_table);
    if (opt.count < 1) {
        err << "prng: --count must be >= 1\n";
        return 1;
    }
    PrngMeta meta;
    auto bytes = prng_stream(n, q, b_table, opt.seed, opt.count, &meta);
    if (opt.as_json || opt.hex) {
        for (std::size_t i = 0; i < opt.count; ++i) {
            std::ostringstream hex;
            hex << std::hex << std::setfill('0');
            for (std::size_t j = 0; j < 8; ++j)
                hex << std::setw(2) << static_cast<unsigned>(bytes[i * 8 + j]);
            if (opt.as_json)
                emit(out, json{{"type", "block"}, {"index", i}, {"hex", hex.str()}});
            else
                out << hex.str() << "\n";
        }
        if (opt.as_json)
            emit(out, json{{"type", "meta"}, {"count", opt.count}, {"reseeds", meta.reseeds}});
    } else {
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
    }
    return 0;
}

// ---- convert ------------------------------------------------------------

struct ConvertOpts {
    std::string a;
    std::string b;
    std::string point;
    long multiples = 5;
    bool as_json = false;
};

int run_convert(const ConvertOpts& opt, std::ostream& out, std::ostream& err) {
    RationalField f;
    mpq_class A(parse_integer(opt.a));
    mpq_class B(parse_integer(opt.b));
    auto xy = parse_integer_list(opt.point);
    if (xy.size() != 2) {
        err << "convert: --point needs x,y\n";
        return 1;
    }
    mpq_class nu(xy[0]), xi(xy[1]);
    Weierstrass<RationalField> curve{A, B};
    auto p = WPoint<mpq_class>::at(nu, xi);
    if (!w_on_curve(f, curve, p)) {
        err << "convert: point is not on y^2 = x^3 + A x + B\n";
        return 1;
    }
    auto t = birational_params(f, A, nu, xi);

    json bundle{{"type", "bundle"},
                {"A", rat_str(A)},
                {"B", rat_str(B)},
                {"point", json::array({rat_str(nu), rat_str(xi)})},
                {"alpha", rat_str(t.alpha)},
                {"beta", rat_str(t.beta)},
                {"J", rat_str(t.j)},
                {"a", rat_str(t.a)},
                {"b", rat_str(t.b)},
                {"K", rat_str(t.k)},
                {"alpha5", rat_str(t.alpha5)},
                {"beta5", rat_str(t.beta5)},
                {"J5", rat_str(t.j5)},
                {"degenerate_alpha", t.degenerate_alpha},
                {"degenerate_beta", t.degenerate_beta},
                {"lyness_b_zero", t.lyness_b_zero},
                {"lyness_five_torsion", t.lyness_five_torsion}};
    if (!t.degenerate_beta) {
        auto twist = twist_check(f, t, A, B);
        bundle["twist"] = json{{"A_bar", rat_str(twist.a_bar)},
                               {"B_bar", rat_str(twist.b_bar)},
                               {"nu_bar", rat_str(twist.nu_bar)},
                               {"xi_bar", rat_str(twist.xi_bar)},
                               {"on_curve", twist.on_curve}};
    } else {
        bundle["twist"] = json();
    }

    json transported = json::array();
    auto mult = p;
    for (long k = 2; k <= opt.multiples; ++k) {
        mult = w_add(f, curve, mult, p);
        json row{{"n", k}};
        if (mult.infinite()) {
            row["weierstrass"] = "infinity";
            transported.push_back(row);
            continue;
        }
        row["weierstrass"] = json::array({rat_str(mult.x()), rat_str(mult.y())});
        try {
            auto [u, v] = weierstrass_to_somos4(f, t, mult);
            row["somos4"] = json::array({rat_str(u), rat_str(v)});
            auto [lx, ly] = somos4_to_lyness(f, t, u, v);
            row["lyness"] = json::array({rat_str(lx), rat_str(ly)});
            auto [sx, sy] = lyness_to_somos5(f, t, lx, ly);
            row["somos5"] = json::array({rat_str(sx), rat_str(sy)});
        } catch (const std::domain_error& e) {
            row["degenerate"] = e.what();
        }
        transported.push_back(row);
    }
    bundle["transported"] = transported;

    if (opt.as_json) {
        emit(out, bundle);
    } else {
        out << "alpha=" << rat_str(t.alpha) << " beta=" << rat_str(t.beta)
            << " J=" << rat_str(t.j) << "\n";
        out << "a=" << rat_str(t.a) << " b=" << rat_str(t.b) << " K=" << rat_str(t.k) << "\n";
        out << "alpha5=" << rat_str(t.alpha5) << " beta5=" << rat_str(t.beta5)
            << " J5=" << rat_str(t.j5) << "\n";
        for (const auto& row : transported) out << row.dump() << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stage-1 ECM factorization with QRT maps (Somos-4, Somos-5, Lyness)"};
    app.require_subcommand(1);

    FactorOpts fo;
    auto* factor = app.add_subcommand("factor", "run stage-1 ECM trials against N");
    factor->add_option("n", fo.n, "integer to factor (decimal or 0x hex)")->required();
    factor->add_option("--family", fo.family, "somos4, somos5 or lyness")
        ->check(CLI::IsMember({"somos4", "somos5", "lyness"}));
    factor->add_option("--b1", fo.b1, "stage-1 smoothness bound");
    factor->add_option("--trials", fo.trials, "trials per round");
    factor->add_option("--seed", fo.seed, "deterministic seed")->envname("QRT_ECM_SEED");
    factor->add_option("--pipeline", fo.pipeline, "affine or projective")
        ->check(CLI::IsMember({"affine", "projective"}));
    factor->add_option("--exponent-mode", fo.exponent_mode, "product (lcm) or single prime power")
        ->check(CLI::IsMember({"product", "single"}));
    factor->add_option("--threads", fo.threads, "concurrent trials");
    factor->add_option("--fixed-params", fo.fixed_params, "comma-separated curve parameters");
    factor->add_option("--s", fo.fixed_s, "fixed scalar instead of the B1-derived exponent");
    factor->add_flag("--chain-trace", fo.chain_trace, "dump the addition chain as JSON lines");
    factor->add_flag("--json", fo.as_json, "JSON-lines output");
    factor->add_flag("--quiet", fo.quiet, "suppress per-trial progress");

    BenchOpts bo;
    auto* bench = app.add_subcommand("bench", "operation-count benchmark vs the Edwards model");
    bench->add_option("--bits", bo.bits, "scalar size in bits");
    bench->add_option("--scalars", bo.scalars, "number of random scalars");
    bench->add_option("--seed", bo.seed, "deterministic seed")->envname("QRT_ECM_SEED");
    bench->add_flag("--json", bo.as_json, "JSON-lines output");
    bench->add_flag("--quiet", bo.quiet, "summary rows only");

    SequenceOpts so;
    auto* sequence = app.add_subcommand("sequence", "extend a Somos-4/5/7 tau sequence");
    sequence->add_option("--kind", so.kind, "somos4, somos5 or somos7");
    sequence->add_option("--coeffs", so.coeffs, "two comma-separated coefficients")->required();
    sequence->add_option("--init", so.init, "initial terms (4, 5 or 7 of them)")->required();
    sequence->add_option("--terms", so.terms, "total number of terms to emit");
    sequence->add_option("--mod", so.mod, "work in Z/NZ instead of exact rationals");
    sequence->add_option("--first-index", so.first_index, "index of the first initial term");
    sequence->add_flag("--json", so.as_json, "JSON-lines output");

    PrngOpts po;
    auto* prng = app.add_subcommand("prng", "q-Painleve Lyness pseudorandom byte stream");
    prng->add_option("--mod", po.mod, "modulus N")->required();
    prng->add_option("--q", po.q, "q parameter (q=1 is the plain Lyness case)");
    prng->add_option("--b", po.b_table, "periodic b table, comma-separated")->required();
    prng->add_option("--seed", po.seed, "deterministic seed")->envname("QRT_ECM_SEED");
    prng->add_option("--count", po.count, "number of 8-byte outputs");
    prng->add_flag("--hex", po.hex, "hex lines instead of raw bytes");
    prng->add_flag("--json", po.as_json, "JSON-lines output");

    ConvertOpts co;
    auto* convert = app.add_subcommand("convert", "Weierstrass -> QRT parameter bundle");
    convert->add_option("--A", co.a, "Weierstrass A")->required();
    convert->add_option("--B", co.b, "Weierstrass B")->required();
    convert->add_option("--point", co.point, "rational point x,y")->required();
    convert->add_option("--multiples", co.multiples, "transport multiples up to nP");
    convert->add_flag("--json", co.as_json, "single JSON bundle line");

    std::vector<const char*> argv;
    argv.push_back("qrtecm");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "qrtecm: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(factor)) return run_factor(fo, out, err);
        if (app.got_subcommand(bench)) return run_bench(bo, out, err);
        if (app.got_subcommand(sequence)) return run_sequence(so, out, err);
        if (app.got_subcommand(prng)) return run_prng(po, out, err);
        if (app.got_subcommand(convert)) return run_convert(co, out, err);
    } catch (const std::exception& e) {
        err << "qrtecm: " << e.what() << "\n";
        return 1;
    }
    err << "qrtecm: no subcommand\n";
    return 1;
}

namespace {

struct Field {
    const char* key;
    nlohmann::json::value_t type;
};

bool check_fields(const json& line, std::initializer_list<Field> required, std::string* why) {
    for (const auto& field : required) {
        if (!line.contains(field.key)) {
            if (why) *why = std::string("missing key: ") + field.key;
            return false;
        }
        const auto& v = line.at(field.key);
        bool ok = v.type() == field.type ||
                  (field.type == json::value_t::number_integer &&
                   (v.is_number_integer() || v.is_number_unsigned())) ||
                  (field.type == json::value_t::number_float && v.is_number());
        if (!ok) {
            if (why) *why = std::string("wrong type for key: ") + field.key;
            return false;
        }
    }
    return true;
}

constexpr auto kInt = nlohmann::json::value_t::number_integer;
constexpr auto kNum = nlohmann::json::value_t::number_float;
constexpr auto kStr = nlohmann::json::value_t::string;
constexpr auto kBool = nlohmann::json::value_t::boolean;
constexpr auto kArr = nlohmann::json::value_t::array;
constexpr auto kObj = nlohmann::json::value_t::object;

}  // namespace

bool validate_line(std::string_view subcommand, const json& line, std::string* why) {
    if (!line.is_object() || !line.contains("type") || !line.at("type").is_string()) {
        if (why) *why = "line is not an object with a string `type`";
        return false;
    }
    std::string type = line.at("type").get<std::string>();
    if (subcommand == "factor") {
        if (type == "trial")
            return check_fields(line, {{"n", kStr}, {"trial", kInt}, {"status", kStr},
                                       {"step", kInt}, {"curve", kObj}}, why);
        if (type == "chain")
            return check_fields(line, {{"step", kInt}, {"op", kStr}, {"index", kStr}}, why);
        if (type == "report")
            return check_fields(line, {{"n", kStr}, {"status", kStr}, {"trial", kInt},
                                       {"step", kInt}, {"m_count", kInt}, {"b_count", kInt},
                                       {"elapsed_ms", kNum}, {"complete", kBool},
                                       {"factors", kArr}}, why);
    } else if (subcommand == "bench") {
        if (type == "op")
            return check_fields(line, {{"scalar", kInt}, {"op", kStr}, {"count", kInt},
                                       {"M", kInt}, {"S", kInt}, {"B", kInt}, {"bits", kInt}},
                                why);
        if (type == "summary")
            return check_fields(line, {{"side", kStr}}, why);
    } else if (subcommand == "sequence") {
        if (type == "term")
            return check_fields(line, {{"n", kInt}, {"tau", kStr}}, why);
    } else if (subcommand == "prng") {
        if (type == "block")
            return check_fields(line, {{"index", kInt}, {"hex", kStr}}, why);
        if (type == "meta")
            return check_fields(line, {{"count", kInt}, {"reseeds", kInt}}, why);
    } else if (subcommand == "convert") {
        if (type == "bundle")
            return check_fields(line, {{"A", kStr}, {"B", kStr}, {"point", kArr},
                                       {"alpha", kStr}, {"beta", kStr}, {"J", kStr}, {"a", kStr},
                                       {"b", kStr}, {"K", kStr}, {"alpha5", kStr},
                                       {"beta5", kStr}, {"J5", kStr}, {"transported", kArr}},
                                why);
    }
    if (why) *why = "unknown line type for subcommand: " + type;
    return false;
}

}  // namespace qrtecm::cli
