#include "steenspec_cli/app.hpp"

#include "steenspec_cli/parse.hpp"

#include <steenspec/support.hpp>
#include <steenspec/steenrod.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace steenspec::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string ring = "d-limit";
    std::string profile;
    int max_t = 4;
    std::int64_t max_internal = 64;
    std::int64_t max_homological = 64;
    bool json = false;
    std::string job;

    std::string expr;
    std::string ideal;
    std::string x;
    std::string y;
    int n = 0;
    bool elementary = false;
    bool plain = false;
    bool all = false;
    bool outside_double = false;
    std::string csv;
    std::string dot;
};

Truncation truncation(const Options& o)
{
    if (o.max_t < 1 || o.max_t > 30)
        throw UsageError("--max-t must lie in 1..30");
    if (o.max_internal < 0 || o.max_homological < 0)
        throw UsageError("degree bounds must be non-negative");
    return Truncation{o.max_t, o.max_internal, o.max_homological};
}

ExtRing make_ring(const Options& o)
{
    const auto tr = truncation(o);
    if (o.ring == "d-limit")
        return d_limit_ring(tr);
    if (o.ring == "elementary") {
        if (o.profile.empty())
            throw UsageError("--ring elementary needs --profile");
        return ext_of_elementary(QuotientHopf(ProfileFunction::parse(o.profile)), tr);
    }
    throw UsageError("--ring must be d-limit or elementary");
}

Ideal parse_ideal(const ExtRing& ring, const std::string& text)
{
    return Ideal(ring.presentation(), parse_poly_list(text, &ring.ring()));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

class Emitter
{
public:
    Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

    void field(const std::string& key, const std::string& text) { add(key, text, text); }
    void field(const std::string& key, bool b) { add(key, bool_text(b), b); }
    void field(const std::string& key, const std::string& text, ordered_json value) { add(key, text, std::move(value)); }
    /// A bare result line (no key in text mode).
    void result(const std::string& text)
    {
        lines_.push_back(text);
        doc_["result"] = text;
    }
    void line(const std::string& text) { lines_.push_back(text); }
    ordered_json& doc() { return doc_; }

    void flush()
    {
        if (json_) {
            out_ << doc_.dump() << '\n';
            return;
        }
        for (const auto& l : lines_)
            out_ << l << '\n';
    }

private:
    void add(const std::string& key, const std::string& text, ordered_json value)
    {
        lines_.push_back(key + ": " + text);
        doc_[key] = std::move(value);
    }

    std::ostream& out_;
    bool json_;
    std::vector<std::string> lines_;
    ordered_json doc_ = ordered_json::object();
};

void emit_ideal(Emitter& e, const std::string& key, const Ideal& I)
{
    e.field(key, ideal_to_string(I), ideal_generator_strings(I));
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw UsageError(what);
}

void cmd_profile_check(const Options& o, Emitter& e)
{
    require(!o.profile.empty(), "profile-check needs --profile");
    const auto p = ProfileFunction::parse(o.profile);
    const bool ok = profile_admissible(p, 16);
    e.field("admissible", ok);
    if (o.elementary)
        e.field("elementary", ok && is_elementary(QuotientHopf(p), 16));
}

void cmd_coproduct(const Options& o, Emitter& e)
{
    require(!o.expr.empty(), "coproduct needs an expression");
    const Poly p = parse_poly(o.expr, nullptr);
    if (o.profile.empty()) {
        e.result(to_string(coproduct(p)));
    } else {
        const QuotientHopf q(ProfileFunction::parse(o.profile));
        Poly reduced;
        for (const auto& m : p.terms())
            if (!q.is_zero_monomial(m))
                reduced += Poly(m);
        e.result(to_string(coproduct(reduced, &q)));
    }
}

void cmd_conjugate(const Options& o, Emitter& e)
{
    require(o.n >= 0 && o.n <= 12, "conjugate takes n in 0..12");
    e.result(to_string(conjugate(o.n)));
}

void cmd_coaction(const Options& o, Emitter& e)
{
    require(!o.expr.empty(), "coaction needs an expression");
    const auto ring = make_ring(o);
    const CoactionTable table(ring);
    const auto value = coaction_poly(parse_poly(o.expr, &ring.ring()), table);
    e.result(to_string(value));
    if (o.outside_double) {
        std::vector<std::string> out;
        for (const auto& m : left_factors_outside_double(value))
            out.push_back(to_string(m));
        std::string text;
        for (const auto& s : out)
            text += (text.empty() ? "" : ", ") + s;
        e.field("outside-double", out.empty() ? "none" : text, out);
    }
}

void cmd_sharp(const Options& o, Emitter& e)
{
    const auto ring = make_ring(o);
    emit_ideal(e, "sharp", sharp(parse_ideal(ring, o.ideal), CoactionTable(ring)));
}

void cmd_star(const Options& o, Emitter& e)
{
    const auto ring = make_ring(o);
    emit_ideal(e, "star", star(parse_ideal(ring, o.ideal), CoactionTable(ring), ring.truncation()));
}

void cmd_invariant(const Options& o, Emitter& e)
{
    const auto ring = make_ring(o);
    const auto report = is_invariant(parse_ideal(ring, o.ideal), CoactionTable(ring));
    e.field("invariant", report.is_invariant);
    if (report.witness) {
        const auto& w = *report.witness;
        ordered_json j;
        j["generator"] = to_string(w.generator);
        j["left"] = to_string(w.left);
        j["component"] = to_string(w.component);
        e.field("witness", to_string(w.generator) + " at " + to_string(w.left) + " -> " + to_string(w.component), j);
    }
}

void cmd_radical_member(const Options& o, Emitter& e)
{
    require(!o.expr.empty(), "radical-member needs an expression");
    const auto ring = make_ring(o);
    e.field("radical-member", radical_member(parse_poly(o.expr, &ring.ring()), parse_ideal(ring, o.ideal)));
}

void cmd_vinv(const Options& o, Emitter& e)
{
    const auto ring = make_ring(o);
    const CoactionTable table(ring);
    const SupportSet S(parse_ideal(ring, o.x), table, !o.plain);
    const SupportSet T(parse_ideal(ring, o.y), table, !o.plain);
    e.field("subset", vinv_subset(S, T));
}

void cmd_thick(const Options& o, Emitter& e)
{
    const auto ring = make_ring(o);
    const CoactionTable table(ring);
    const KoszulObject X(ring, parse_poly_list(o.x, &ring.ring()), !o.plain);
    const KoszulObject Y(ring, parse_poly_list(o.y, &ring.ring()), !o.plain);
    e.field("subset", thick_subset(X, Y, table));
}

void cmd_enum_primes(const Options& o, Emitter& e)
{
    const auto ring = make_ring(o);
    const auto records = enumerate_monomial_invariant_primes(CoactionTable(ring));
    std::size_t count = 0;
    ordered_json list = ordered_json::array();
    e.field("records", std::to_string(records.size()), records.size());
    std::vector<std::string> lines;
    for (const auto& r : records) {
        const bool shown = o.all || (r.is_prime && r.is_invariant);
        count += r.is_prime && r.is_invariant;
        if (!shown)
            continue;
        const auto vars = variables_to_string(r.variables);
        if (o.all) {
            lines.push_back("(" + vars + ") prime=" + bool_text(r.is_prime) + " invariant=" + bool_text(r.is_invariant));
            list.push_back({{"variables", vars}, {"is_prime", r.is_prime}, {"is_invariant", r.is_invariant}});
        } else {
            lines.push_back("(" + vars + ")");
            list.push_back(vars);
        }
    }
    e.field("invariant-primes", std::to_string(count), count);
    for (const auto& l : lines)
        e.line(l);
    e.doc()[o.all ? "records_list" : "primes"] = list;
    if (!o.csv.empty()) {
        std::ofstream f(o.csv);
        if (!f)
            throw Error("io", "cannot write " + o.csv);
        write_csv(f, records);
    }
    if (!o.dot.empty()) {
        std::ofstream f(o.dot);
        if (!f)
            throw Error("io", "cannot write " + o.dot);
        write_dot(f, records);
    }
}

void cmd_invariants_subring(const Options& o, Emitter& e)
{
    const auto ring = make_ring(o);
    ordered_json pieces = ordered_json::array();
    for (const auto& piece : invariants_subring(CoactionTable(ring), ring.truncation())) {
        std::string text;
        ordered_json basis = ordered_json::array();
        for (const auto& b : piece.basis) {
            text += (text.empty() ? "" : ", ") + to_string(b);
            basis.push_back(to_string(b));
        }
        e.line(to_string(piece.degree) + ": " + text);
        pieces.push_back({{"degree", {piece.degree.homological, piece.degree.internal}}, {"basis", basis}});
    }
    e.doc()["pieces"] = pieces;
}

void cmd_restrict(const Options& o, Emitter& e)
{
    require(o.ring == "d-limit", "restrict maps out of the d-limit ring; use --ring d-limit");
    require(!o.profile.empty(), "restrict needs --profile for the elementary target");
    const auto source = make_ring(o);
    const QuotientHopf q(ProfileFunction::parse(o.profile));
    const RingMap res = restriction(source, q);
    if (!o.ideal.empty()) {
        require(o.expr.empty(), "restrict takes either --ideal or an expression, not both");
        const Ideal p = parse_ideal(res.target(), o.ideal);
        emit_ideal(e, "preimage", spc_map_res(p, res.target(), source));
    } else {
        require(!o.expr.empty(), "restrict needs an expression or --ideal");
        e.field("image", to_string(res.apply(parse_poly(o.expr, &source.ring()))));
    }
}

// Translates a job file into an argument vector.
std::vector<std::string> job_arguments(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error("io", "cannot read job file " + path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(f);
    } catch (const nlohmann::json::exception& ex) {
        throw Error("bad-job", std::string("job file is not valid JSON: ") + ex.what());
    }
    auto bad = [](const std::string& msg) { throw Error("bad-job", msg); };
    if (!doc.is_object())
        bad("job file must hold a JSON object");
    for (const auto& [k, v] : doc.items())
        if (k != "ring" && k != "truncation" && k != "command" && k != "arguments" && k != "json")
            bad("unknown job field \"" + k + "\"");
    if (!doc.contains("command") || !doc["command"].is_string())
        bad("job needs a string \"command\"");

    std::vector<std::string> args{doc["command"].get<std::string>()};
    if (doc.contains("ring")) {
        const auto& r = doc["ring"];
        if (!r.is_object())
            bad("\"ring\" must be an object");
        // Full validation of the descriptor, then flags.
        (void)ring_from_descriptor(r.dump(), Truncation{});
        args.insert(args.end(), {"--ring", r["flavor"].get<std::string>(), "--max-t", std::to_string(r["max_t"].get<int>())});
        if (r.contains("profile"))
            args.insert(args.end(), {"--profile", r["profile"].get<std::string>()});
    }
    if (doc.contains("truncation")) {
        const auto& t = doc["truncation"];
        if (!t.is_object())
            bad("\"truncation\" must be an object");
        for (const auto& [k, v] : t.items()) {
            if (k != "max_internal" && k != "max_homological")
                bad("unknown truncation field \"" + k + "\"");
            if (!v.is_number_integer())
                bad("truncation field \"" + k + "\" must be an integer");
            args.push_back(k == "max_internal" ? "--max-internal" : "--max-homological");
            args.push_back(std::to_string(v.get<std::int64_t>()));
        }
    }
    if (doc.contains("arguments")) {
        const auto& a = doc["arguments"];
        if (!a.is_object())
            bad("\"arguments\" must be an object");
        for (const auto& [k, v] : a.items()) {
            static const std::vector<std::string> strings{"ideal", "x", "y", "profile", "csv", "dot"};
            static const std::vector<std::string> flags{"elementary", "plain", "all", "outside_double"};
            if (k == "expr") {
                if (!v.is_string())
                    bad("argument \"expr\" must be a string");
                args.push_back(v.get<std::string>());
            } else if (k == "n") {
                if (!v.is_number_integer())
                    bad("argument \"n\" must be an integer");
                args.push_back(std::to_string(v.get<int>()));
            } else if (std::find(strings.begin(), strings.end(), k) != strings.end()) {
                if (!v.is_string())
                    bad("argument \"" + k + "\" must be a string");
                args.insert(args.end(), {"--" + k, v.get<std::string>()});
            } else if (std::find(flags.begin(), flags.end(), k) != flags.end()) {
                if (!v.is_boolean())
                    bad("argument \"" + k + "\" must be a boolean");
                if (v.get<bool>()) {
                    std::string flag = k;
                    std::replace(flag.begin(), flag.end(), '_', '-');
                    args.push_back("--" + flag);
                }
            } else {
                bad("unknown job argument \"" + k + "\"");
            }
        }
    }
    if (doc.contains("json")) {
        if (!doc["json"].is_boolean())
            bad("\"json\" must be a boolean");
        if (doc["json"].get<bool>())
            args.push_back("--json");
    }
    return args;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message, int line = 0, int column = 0)
{
    ordered_json e;
    e["kind"] = kind;
    e["message"] = message;
    if (line > 0) {
        e["line"] = line;
        e["column"] = column;
    }
    err << ordered_json{{"error", e}}.dump() << '\n';
}

} // namespace

std::vector<std::string> ideal_generator_strings(const Ideal& I)
{
    std::vector<std::string> out;
    const Ideal reduced = groebner_basis(I);
    for (const auto& g : reduced.generators())
        out.push_back(to_string(g));
    return out;
}

std::string ideal_to_string(const Ideal& I)
{
    const auto gens = ideal_generator_strings(I);
    if (gens.empty())
        return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? ", " : "") + gens[i];
    return s + ")";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"GF(2) toolkit for the dual Steenrod algebra, Ext rings of its quotients and invariant supports",
                 "steenspec"};
    app.option_defaults()->always_capture_default();
    app.fallthrough();
    app.add_option("--job", o.job, "Run the command described by a JSON job file");
    app.add_option("--ring", o.ring, "d-limit or elementary")->check(CLI::IsMember({"d-limit", "elementary"}));
    app.add_option("--profile", o.profile, "Profile function, e.g. prefix=[0];tail=const:2");
    app.add_option("--max-t", o.max_t, "Largest t of an h(t,s) variable");
    app.add_option("--max-internal", o.max_internal, "Internal degree bound");
    app.add_option("--max-homological", o.max_homological, "Homological degree bound");
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_option("--ideal", o.ideal, "Comma-separated ideal generators");
    app.add_option("--x", o.x, "Left-hand generators");
    app.add_option("--y", o.y, "Right-hand generators");
    app.add_flag("--elementary", o.elementary, "Also report whether the quotient is elementary");
    app.add_flag("--plain", o.plain, "Use plain supports instead of invariant ones");
    app.add_flag("--all", o.all, "List every enumerated subset");
    app.add_flag("--outside-double", o.outside_double, "List left factors outside F2[xi(1)^2, xi(2)^4, ...]");
    app.add_option("--csv", o.csv, "Write enumeration records as CSV");
    app.add_option("--dot", o.dot, "Write the invariant-prime Hasse diagram as DOT");

    using Handler = void (*)(const Options&, Emitter&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h) {
        auto* sub = app.add_subcommand(name, help);
        commands.emplace_back(sub, h);
        return sub;
    };
    add("profile-check", "Check the admissibility condition of a profile", cmd_profile_check);
    add("coproduct", "Milnor coproduct of a polynomial in the xi's", cmd_coproduct)
        ->add_option("expr", o.expr, "Polynomial in xi(n)");
    add("conjugate", "Conjugate zeta(n) of xi(n)", cmd_conjugate)->add_option("n", o.n, "Index")->required();
    add("coaction", "Coaction of a ring element", cmd_coaction)->add_option("expr", o.expr, "Ring element");
    add("sharp", "Smallest invariant ideal containing --ideal", cmd_sharp);
    add("star", "Largest invariant subideal of --ideal within the degree bounds", cmd_star);
    add("invariant", "Whether --ideal is invariant", cmd_invariant);
    add("radical-member", "Whether an element lies in the radical of --ideal", cmd_radical_member)
        ->add_option("expr", o.expr, "Ring element");
    add("vinv", "Whether V(--x) lies inside V(--y)", cmd_vinv);
    add("thick", "Whether thick<Koszul(--x)> lies inside thick<Koszul(--y)>", cmd_thick);
    add("enum-primes", "Enumerate monomial invariant primes", cmd_enum_primes);
    add("invariants-subring", "Coaction invariants per bidegree", cmd_invariants_subring);
    add("restrict", "Restriction to an elementary quotient: image of an element or preimage of --ideal",
        cmd_restrict)
        ->add_option("expr", o.expr, "Ring element");
    app.require_subcommand(0, 1);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return 2;
    }

    if (!o.job.empty()) {
        if (args.size() != 2) {
            err << "usage error: --job takes no other arguments\n";
            return 2;
        }
        std::vector<std::string> job_args;
        try {
            job_args = job_arguments(o.job);
        } catch (const Error& e) {
            write_error(err, e.kind(), e.what());
            return 1;
        }
        return run(job_args, out, err);
    }

    Handler handler = nullptr;
    for (const auto& [sub, h] : commands)
        if (sub->parsed())
            handler = h;
    if (!handler) {
        err << "usage error: a subcommand is required\n" << app.help();
        return 2;
    }

    Emitter emitter(out, o.json);
    try {
        handler(o, emitter);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        write_error(err, e.kind(), e.what(), e.line(), e.column());
        return 1;
    } catch (const Error& e) {
        write_error(err, e.kind(), e.what());
        return 1;
    }
    emitter.flush();
    return 0;
}

} // namespace steenspec::cli
