#include "steenspec/ext_ring.hpp"

#include "steenspec/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>

namespace steenspec {

ExtRing ext_of_elementary(const QuotientHopf& q, const Truncation& tr)
{
    const auto bound = std::max<std::int64_t>(16, static_cast<std::int64_t>(q.profile().prefix().size()));
    if (!is_elementary(q, bound))
        throw Error("not-elementary", "profile " + q.profile().to_string() + " is not elementary");
    std::vector<Generator> vars;
    for (int t = 1; t <= tr.max_t; ++t)
        for (int s = 0; s < t; ++s)
            if (q.alive(t, s))
                vars.push_back(Generator::h(t, s));
    ExtRing r;
    r.flavor_ = ExtFlavor::Elementary;
    r.quotient_ = q;
    r.truncation_ = tr;
    r.presentation_ = std::make_shared<const RingPresentation>(std::move(vars), std::vector<Monomial>{});
    return r;
}

ExtRing d_limit_ring(const Truncation& tr)
{
    if (tr.max_t < 1)
        throw Error("bad-truncation", "max_t must be positive");
    std::vector<Generator> vars;
    for (int t = 1; t <= tr.max_t; ++t)
        for (int s = 0; s < t; ++s)
            vars.push_back(Generator::h(t, s));
    std::vector<Monomial> relations;
    for (auto a : vars)
        for (auto b : vars)
            if (!(a == b) && a.t() <= b.s())
                relations.push_back(Monomial(a) * Monomial(b));
    ExtRing r;
    r.flavor_ = ExtFlavor::DLimit;
    r.truncation_ = tr;
    r.presentation_ = std::make_shared<const RingPresentation>(std::move(vars), std::move(relations));
    return r;
}

ExtRing ring_from_descriptor(std::string_view json, const Truncation& bounds)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad-descriptor", std::string("ring descriptor is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error("bad-descriptor", "ring descriptor must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "flavor" && key != "profile" && key != "max_t")
            throw Error("bad-descriptor", "unknown ring descriptor field \"" + key + "\"");
    if (!doc.contains("flavor") || !doc["flavor"].is_string())
        throw Error("bad-descriptor", "ring descriptor needs a string \"flavor\"");
    if (!doc.contains("max_t") || !doc["max_t"].is_number_integer())
        throw Error("bad-descriptor", "ring descriptor needs an integer \"max_t\"");
    Truncation tr = bounds;
    tr.max_t = doc["max_t"].get<int>();
    const auto flavor = doc["flavor"].get<std::string>();
    if (flavor == "d-limit") {
        if (doc.contains("profile"))
            throw Error("bad-descriptor", "the d-limit ring takes no profile");
        return d_limit_ring(tr);
    }
    if (flavor == "elementary") {
        if (!doc.contains("profile") || !doc["profile"].is_string())
            throw Error("bad-descriptor", "an elementary ring needs a string \"profile\"");
        return ext_of_elementary(QuotientHopf(ProfileFunction::parse(doc["profile"].get<std::string>())), tr);
    }
    throw Error("bad-descriptor", "unknown flavor \"" + flavor + "\"");
}

std::string ring_descriptor(const ExtRing& ring)
{
    nlohmann::ordered_json doc;
    if (ring.flavor() == ExtFlavor::DLimit) {
        doc["flavor"] = "d-limit";
    } else {
        doc["flavor"] = "elementary";
        doc["profile"] = ring.quotient()->profile().to_string();
    }
    doc["max_t"] = ring.truncation().max_t;
    return doc.dump();
}

RingMap::RingMap(ExtRing source, ExtRing target) : source_(std::move(source)), target_(std::move(target)) {}

std::optional<Generator> RingMap::image(Generator g) const
{
    if (!source_.ring().has_variable(g))
        throw Error("unknown-generator", "generator " + g.to_string() + " is not in the source ring");
    if (target_.ring().has_variable(g))
        return g;
    return std::nullopt;
}

Poly RingMap::apply(const Poly& p) const
{
    source_.ring().validate(p);
    std::vector<Monomial> terms;
    for (const auto& m : p.terms()) {
        bool killed = false;
        for (const auto& [g, e] : m.factors())
            if (!target_.ring().has_variable(g)) {
                killed = true;
                break;
            }
        if (!killed)
            terms.push_back(m);
    }
    return target_.ring().reduce(Poly::from_terms(std::move(terms)));
}

RingMap restriction(const ExtRing& source, const QuotientHopf& q)
{
    ExtRing target = ext_of_elementary(q, source.truncation());
    for (const auto& rel : source.ring().relations()) {
        bool survives = true;
        for (const auto& [g, e] : rel.factors())
            if (!target.ring().has_variable(g))
                survives = false;
        if (survives && !target.ring().is_zero_monomial(rel))
            throw Error("ill-defined-map",
                        "relation " + to_string(rel) + " has every factor alive in the target quotient");
    }
    return RingMap(source, std::move(target));
}

bool direct_limit_consistency(const QuotientHopf& E, std::int64_t i, std::int64_t j, const Truncation& tr)
{
    auto gens = [&](const QuotientHopf& q) {
        const ExtRing ring = ext_of_elementary(q, tr);
        const auto& v = ring.ring().variables();
        return std::set<Generator>(v.begin(), v.end());
    };
    const auto gi = gens(make_E_i(E, i));
    const auto gj = gens(make_E_i(E, j));
    if (i <= j && !std::includes(gj.begin(), gj.end(), gi.begin(), gi.end()))
        return false;
    if (j <= i && !std::includes(gi.begin(), gi.end(), gj.begin(), gj.end()))
        return false;
    // Columns beyond max_t contribute no variables, so E_{max_t} already exhausts the union.
    std::set<Generator> all;
    for (std::int64_t k = 0; k <= tr.max_t; ++k) {
        const auto gk = gens(make_E_i(E, k));
        all.insert(gk.begin(), gk.end());
    }
    return all == gens(E);
}

} // namespace steenspec
