#include "pinplus/report.hpp"

#include "json_out.hpp"
#include "pinplus/classify.hpp"
#include "pinplus/cover.hpp"
#include "pinplus/errors.hpp"
#include "pinplus/invariants.hpp"

#include <sstream>

namespace pinplus {

using detail::Json;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string path_string(const std::vector<std::size_t>& path) {
    if (path.empty()) return "/";
    std::string s;
    for (auto i : path) s += "/" + std::to_string(i);
    return s;
}

std::string int_list(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

Json fractions_json(const EtaSet& s) {
    Json out = Json::array();
    for (auto v : s.values()) out.push_back(v.fraction());
    return out;
}

void check_oracle(const Expr& x, const EtaSet& fast, const ReportOptions& opts, OracleResult& result) {
    result = brute_eta(x, opts.max_enum);
    if (result.set != fast)
        throw Error("oracle disagrees on '" + x.str() + "': profile " + fast.str() + ", enumeration " +
                    result.set.str());
}

Json steps_json(const std::vector<RewriteStep>& steps) {
    Json out = Json::array();
    for (const auto& s : steps)
        out.push_back(Json{{"side", s.side == 0 ? "left" : "right"},
                           {"rule", s.rule},
                           {"path", path_string(s.path)},
                           {"before", s.before},
                           {"after", s.after}});
    return out;
}

void steps_text(std::ostream& os, const std::vector<RewriteStep>& steps) {
    for (const auto& s : steps)
        os << "    [" << (s.side == 0 ? "L" : "R") << "] " << s.rule << " at " << path_string(s.path) << ": "
           << s.before << "  ->  " << s.after << "\n";
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
    return s.empty() ? "-" : s;
}

} // namespace

std::optional<Format> format_from_name(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

std::string report(const Expr& input, Format format, const ReportOptions& opts) {
    const Expr x = normalize(input);
    const Topology& t = x.topology();
    const bool pp = pin_plus(x);

    std::optional<PinProfile> profile;
    EtaSet set;
    std::vector<int> classes;
    if (pp) {
        profile = eta_profile(x);
        set = eta_set(x);
        classes = bordism_classes(x);
    }
    std::optional<OracleResult> oracle;
    if (opts.oracle && pp) {
        oracle.emplace();
        check_oracle(x, set, opts, *oracle);
    }

    if (format == Format::Json) {
        Json entries = Json::array();
        std::size_t total = 0;
        if (profile) {
            total = profile->size();
            for (const auto& e : profile->entries()) {
                if (entries.size() == kMaxReportedEntries) break;
                Json restr = profile->loop_bit() ? Json(e.restr) : Json(nullptr);
                entries.push_back(Json{{"label", profile->label_string(e.label)},
                                       {"restr", restr},
                                       {"value", e.value.num()},
                                       {"fraction", e.value.fraction()}});
            }
        }
        Json j{{"expr", x.str()},
               {"chi", t.chi},
               {"sigma", t.sigma},
               {"orientable", t.orientable},
               {"pi1", t.pi1.name()},
               {"h1dim", t.h1dim},
               {"w2zero", t.w2zero},
               {"pin_plus", pp},
               {"structure_count", structure_count(x)},
               {"profile_size", total},
               {"profile", entries},
               {"eta_set", set.nums()},
               {"eta_fractions", fractions_json(set)},
               {"bordism_classes", classes},
               {"oracle", nullptr}};
        if (oracle)
            j["oracle"] = Json{{"eta_set", oracle->set.nums()},
                               {"enumerated", oracle->enumerated},
                               {"accepted", oracle->accepted},
                               {"agrees", true}};
        return detail::dump_json(j);
    }

    std::ostringstream os;
    os << "expr:            " << x.str() << "\n"
       << "orientable:      " << yes_no(t.orientable) << "\n"
       << "pi1:             " << t.pi1.name() << "\n"
       << "chi:             " << t.chi << "\n"
       << "sigma:           " << t.sigma << "\n"
       << "h1dim:           " << t.h1dim << "\n"
       << "w2zero:          " << yes_no(t.w2zero) << "\n"
       << "pin_plus:        " << yes_no(pp) << "\n"
       << "structures:      " << structure_count(x) << "\n";
    if (!profile) return os.str();
    os << "profile:\n";
    std::size_t shown = 0;
    for (const auto& e : profile->entries()) {
        if (shown++ == kMaxReportedEntries) {
            os << "  ... " << profile->size() - kMaxReportedEntries << " more\n";
            break;
        }
        std::string label = profile->label_string(e.label);
        os << "  label " << (label.empty() ? "-" : label);
        if (profile->loop_bit()) os << "  restr " << e.restr;
        os << "  eta " << e.value.num() << " (" << e.value.fraction() << ")\n";
    }
    os << "eta_set:         " << set.str() << " = " << set.fraction_str() << "\n"
       << "bordism_classes: " << int_list(classes) << "\n";
    if (oracle)
        os << "oracle:          " << oracle->set.str() << " agrees (" << oracle->accepted << " of "
           << oracle->enumerated << " labellings)\n";
    return os.str();
}

std::string compare_report(const Expr& left, const Expr& right, Format format, const ReportOptions& opts) {
    const Expr x = normalize(left);
    const Expr y = normalize(right);
    const SmoothVerdict v = smooth_compare(x, y);
    if (opts.oracle) {
        OracleResult scratch;
        for (std::size_t i = 0; i < 2; ++i)
            if (v.eta[i]) check_oracle(i == 0 ? x : y, *v.eta[i], opts, scratch);
    }

    if (format == Format::Json) {
        Json eta = Json::array();
        for (const auto& e : v.eta) eta.push_back(e ? Json(e->nums()) : Json(nullptr));
        Json j{{"left", x.str()},
               {"right", y.str()},
               {"homeo",
                Json{{"outcome", outcome_name(v.homeo.outcome)},
                     {"chain", v.homeo.chain()},
                     {"stable_rule", v.homeo.stable_rule},
                     {"canonical", {v.homeo.canonical[0], v.homeo.canonical[1]}},
                     {"note", v.homeo.note},
                     {"steps", steps_json(v.homeo.steps)}}},
               {"smooth",
                Json{{"outcome", outcome_name(v.outcome)},
                     {"eta_sets", eta},
                     {"chain", v.outcome == SmoothVerdict::Outcome::Diffeomorphic ? Json(v.chain())
                                                                                  : Json::array()},
                     {"note", v.note},
                     {"steps", steps_json(v.steps)}}}};
        return detail::dump_json(j);
    }

    std::ostringstream os;
    os << "left:   " << x.str() << "\n"
       << "right:  " << y.str() << "\n"
       << "homeomorphic: " << outcome_name(v.homeo.outcome) << "\n"
       << "  chain:      " << join(v.homeo.chain()) << (v.homeo.stable_rule ? " (stable)" : "") << "\n"
       << "  canonical:  " << v.homeo.canonical[0] << "  |  " << v.homeo.canonical[1] << "\n";
    if (!v.homeo.note.empty()) os << "  note:       " << v.homeo.note << "\n";
    if (!v.homeo.steps.empty()) {
        os << "  steps:\n";
        steps_text(os, v.homeo.steps);
    }
    os << "smooth: " << outcome_name(v.outcome) << "\n";
    for (std::size_t i = 0; i < 2; ++i)
        if (v.eta[i])
            os << "  eta " << (i == 0 ? "left: " : "right:") << " " << v.eta[i]->str() << " = "
               << v.eta[i]->fraction_str() << "\n";
    if (v.outcome == SmoothVerdict::Outcome::Diffeomorphic) os << "  chain:      " << join(v.chain()) << "\n";
    if (!v.note.empty()) os << "  note:       " << v.note << "\n";
    if (!v.steps.empty()) {
        os << "  steps:\n";
        steps_text(os, v.steps);
    }
    return os.str();
}

std::string cover_report(const Expr& input, Format format) {
    const Expr x = normalize(input);
    const CoverResult c = orientation_cover(x);
    if (format == Format::Json) {
        Json steps = Json::array();
        for (const auto& s : c.steps)
            steps.push_back(Json{{"rule", s.rule}, {"input", s.input}, {"output", s.output}});
        Json j{{"expr", x.str()},
               {"cover", c.cover.str()},
               {"deck_group", x.topology().pi1.name()},
               {"cover_pi1", c.cover.topology().pi1.name()},
               {"chi", x.topology().chi},
               {"cover_chi", c.cover.topology().chi},
               {"steps", steps}};
        return detail::dump_json(j);
    }
    std::ostringstream os;
    os << "expr:       " << x.str() << "\n"
       << "cover:      " << c.cover.str() << "\n"
       << "deck group: " << x.topology().pi1.name() << "\n"
       << "cover pi1:  " << c.cover.topology().pi1.name() << "\n"
       << "chi:        " << x.topology().chi << " -> " << c.cover.topology().chi << "\n"
       << "steps:\n";
    for (const auto& s : c.steps) os << "  " << s.rule << ": " << s.input << "  ->  " << s.output << "\n";
    return os.str();
}

} // namespace pinplus
