#include "closedgeo/io.hpp"

#include <sstream>

#include "closedgeo/errors.hpp"

namespace closedgeo::io {

using nlohmann::json;

namespace {

const json& require_field(const json& doc, const char* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw InvalidProfile(std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<std::int64_t> int_array(const json& doc, const char* key)
{
    const json& arr = require_field(doc, key);
    if (!arr.is_array())
        throw InvalidProfile(std::string("field \"") + key + "\" must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw InvalidProfile(std::string("field \"") + key + "\" must be an array of integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

}  // namespace

IndexProfile parse_profile(std::string_view document)
{
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw InvalidProfile(std::string("malformed profile document: ") + e.what());
    }
    if (!doc.is_object())
        throw InvalidProfile("profile document must be a JSON object");

    const json& n = require_field(doc, "n");
    if (!n.is_number_integer())
        throw InvalidProfile("field \"n\" must be an integer");

    IndexProfile p;
    p.n = n.get<int>();
    p.arc_values = int_array(doc, "I");
    p.nullities = int_array(doc, "N");

    const json& phases = require_field(doc, "t");
    if (!phases.is_array())
        throw InvalidProfile("field \"t\" must be an array of \"p/q\" strings");
    for (std::size_t j = 0; j < phases.size(); ++j) {
        if (!phases[j].is_string())
            throw InvalidProfile("phase t_" + std::to_string(j + 1) + " must be a \"p/q\" string");
        try {
            p.phases.push_back(Rational::parse(phases[j].get<std::string>()));
        } catch (const std::exception& e) {
            throw InvalidProfile("phase t_" + std::to_string(j + 1) + ": " + e.what());
        }
    }

    if (auto it = doc.find("S"); it != doc.end()) {
        if (!it->is_array())
            throw InvalidProfile("field \"S\" must be an array of [S+, S-] pairs");
        std::vector<SplittingPair> pairs;
        for (const auto& pair : *it) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
                throw InvalidProfile("field \"S\" must be an array of [S+, S-] pairs");
            pairs.push_back({pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()});
        }
        p.splitting = std::move(pairs);
    }

    if (auto v = validate_profile(p); !v.empty())
        throw InvalidProfile(v.front().message);
    return p;
}

json profile_to_json(const IndexProfile& p)
{
    json t = json::array();
    for (const auto& phase : p.phases)
        t.push_back(phase.str());
    json doc{{"n", p.n}, {"I", p.arc_values}, {"t", t}, {"N", p.nullities}};
    if (p.splitting) {
        json s = json::array();
        for (const auto& pair : *p.splitting)
            s.push_back({pair.plus, pair.minus});
        doc["S"] = s;
    }
    return doc;
}

json signature_to_json(const Signature& s) { return json{{"n", s.n}, {"I", s.arc_values}, {"N", s.nullities}}; }

json witness_to_json(const Witness& w)
{
    json out = json::object();
    for (const auto& [key, value] : w)
        out[key] = value.str();
    return out;
}

json report_to_json(const ContradictionReport& r)
{
    json doc{{"verdict", "contradiction"},
             {"failed_step", to_string(r.failed_step)},
             {"signature", signature_to_json(r.signature)},
             {"witness", witness_to_json(r.witness)},
             {"detail", r.detail}};
    doc["profile"] = r.profile ? profile_to_json(*r.profile) : json(nullptr);
    return doc;
}

json outcome_to_json(const PipelineOutcome& o)
{
    if (const auto* r = std::get_if<ContradictionReport>(&o))
        return report_to_json(*r);
    const auto& c = std::get<ConsistentUpToHorizon>(o);
    return json{{"verdict", "consistent-up-to-horizon"}, {"horizon", c.horizon}, {"profile", profile_to_json(c.profile)}};
}

json morse_to_json(const MorseReport& r)
{
    json doc{{"max_degree", r.max_degree}, {"w", r.w}, {"b", r.b}, {"q", r.q},
             {"feasible", r.feasible},     {"tail_open", r.tail_open}};
    doc["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
    return doc;
}

json prop33_to_json(const Prop33Report& r)
{
    json doc{{"hypotheses_met", r.status == Prop33Status::Checked},
             {"hypotheses",
              {{"ind_c_is_n_minus_1", r.index_is_n_minus_1},
               {"ind_c2_at_least_n", r.second_index_at_least_n},
               {"alpha_below_two_gamma", r.alpha_below_two_gamma}}}};
    if (r.status == Prop33Status::Checked) {
        doc["conclusions"] = {{"a", r.conclusion_a()},
                              {"b", r.conclusion_b()},
                              {"c", r.conclusion_c()},
                              {"horizon", r.horizon}};
        doc["first_descent"] = r.first_descent ? json(*r.first_descent) : json(nullptr);
    }
    return doc;
}

json summary_to_json(const TheoremSummary& s)
{
    json by_step = json::object();
    for (const auto& [step, count] : s.by_step)
        by_step[to_string(step)] = count;
    json survivors = json::array();
    for (const auto& c : s.survivors)
        survivors.push_back(profile_to_json(c.profile));
    return json{{"n", s.n},
                {"horizon", s.horizon},
                {"Q", s.q},
                {"candidates", s.candidates},
                {"contradicted", s.contradicted},
                {"by_step", by_step},
                {"survivors", survivors}};
}

std::string index_csv(const std::vector<std::int64_t>& seq)
{
    std::ostringstream os;
    os << "m,ind\n";
    for (std::size_t i = 0; i < seq.size(); ++i)
        os << i + 1 << ',' << seq[i] << '\n';
    return os.str();
}

std::string betti_csv(const BettiTable& t)
{
    std::ostringstream os;
    os << "k,b_k\n";
    for (std::size_t k = 0; k < t.ranks.size(); ++k)
        os << k << ',' << t.ranks[k] << '\n';
    return os.str();
}

std::string morse_csv(const MorseReport& r)
{
    std::ostringstream os;
    os << "k,w_k,b_k,q_k\n";
    for (std::size_t k = 0; k < r.w.size(); ++k)
        os << k << ',' << r.w[k] << ',' << r.b[k] << ',' << r.q[k] << '\n';
    return os.str();
}

}  // namespace closedgeo::io
