#include "dgc/constants.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dgc/error.hpp"

namespace dgc {

ConstantsProfile ConstantsProfile::paper()
{
    ConstantsProfile p;
    p.name = "paper";
    p.beta_num = 1;
    p.beta_den = std::int64_t { 1 } << 18;
    p.eps_num = 1;
    p.eps_den = std::int64_t { 1 } << 23;
    p.ell_scale = std::ldexp(1.0, 54); // 2^54 * log2(delta)
    p.ell_floor = 1;
    p.critical_events_only = false;
    return p;
}

ConstantsProfile ConstantsProfile::desk() { return ConstantsProfile {}; }

std::int64_t ConstantsProfile::ell_min(int delta) const
{
    double scaled = delta >= 2 ? ell_scale * std::log2(static_cast<double>(delta)) : 0.0;
    auto v = static_cast<std::int64_t>(scaled);
    return std::max(ell_floor, v);
}

int ConstantsProfile::palette_drop(int k) const
{
    return static_cast<int>((eps_num * k) / eps_den);
}

std::int64_t ConstantsProfile::required_repeats(std::int64_t ell) const
{
    // smallest integer r with r * beta_den > beta_num * ell
    return (beta_num * ell) / beta_den + 1;
}

std::string ConstantsProfile::to_json() const
{
    nlohmann::ordered_json j;
    j["name"] = name;
    j["beta_num"] = beta_num;
    j["beta_den"] = beta_den;
    j["eps_num"] = eps_num;
    j["eps_den"] = eps_den;
    j["ell_scale"] = ell_scale;
    j["ell_floor"] = ell_floor;
    j["critical_events_only"] = critical_events_only;
    j["lll_max_phases"] = lll_max_phases;
    j["lll_restarts"] = lll_restarts;
    return j.dump(2);
}

ConstantsProfile ConstantsProfile::from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("constants profile: ") + e.what(), 0);
    }
    ConstantsProfile p = desk();
    auto get = [&j](const char* key, auto& field) {
        if (j.contains(key))
            field = j.at(key).template get<std::decay_t<decltype(field)>>();
    };
    get("name", p.name);
    get("beta_num", p.beta_num);
    get("beta_den", p.beta_den);
    get("eps_num", p.eps_num);
    get("eps_den", p.eps_den);
    get("ell_scale", p.ell_scale);
    get("ell_floor", p.ell_floor);
    get("critical_events_only", p.critical_events_only);
    get("lll_max_phases", p.lll_max_phases);
    get("lll_restarts", p.lll_restarts);
    if (p.beta_den <= 0 || p.eps_den <= 0)
        throw PreconditionError("constants profile: denominators must be positive");
    return p;
}

ConstantsProfile ConstantsProfile::load(const std::string& name_or_path)
{
    if (name_or_path == "paper")
        return paper();
    if (name_or_path == "desk")
        return desk();
    std::ifstream in(name_or_path);
    if (!in)
        throw PreconditionError("cannot open constants profile '" + name_or_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

} // namespace dgc
