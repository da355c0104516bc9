#include "json_out.hpp"

namespace pinplus::detail {

namespace {

bool is_flat(const Json& j) {
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

void write(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += inner + Json(key).dump() + ": ";
            write(value, indent + 1, out);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (is_flat(j)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += inner;
            write(j[i], indent + 1, out);
        }
        out += "\n" + pad + "]";
    } else {
        out += j.dump();
    }
}

} // namespace

std::string dump_json(const Json& j) {
    std::string out;
    write(j, 0, out);
    out += "\n";
    return out;
}

} // namespace pinplus::detail
