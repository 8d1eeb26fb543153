#include "dgd/schema.hpp"

namespace dgd {

using nlohmann::json;

namespace {

bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

bool check(const json& v, const json& s, const std::string& path, std::string* err) {
    auto fail = [&](const std::string& msg) {
        if (err) *err = path + ": " + msg;
        return false;
    };
    if (s.contains("type")) {
        const json& t = s["type"];
        if (t.is_string()) {
            if (!type_matches(v, t.get<std::string>()))
                return fail("expected type " + t.get<std::string>());
        } else if (t.is_array()) {
            bool any = false;
            for (const auto& one : t)
                if (type_matches(v, one.get<std::string>())) any = true;
            if (!any) return fail("value matches none of the allowed types");
        }
    }
    if (s.contains("enum")) {
        bool any = false;
        for (const auto& cand : s["enum"])
            if (v == cand) any = true;
        if (!any) return fail("value not in enum");
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& key : s["required"])
                if (!v.contains(key.get<std::string>()))
                    return fail("missing required key '" + key.get<std::string>() + "'");
        const json* props = s.contains("properties") ? &s["properties"] : nullptr;
        bool additional = true;
        if (s.contains("additionalProperties") && s["additionalProperties"].is_boolean())
            additional = s["additionalProperties"].get<bool>();
        const json* addl_schema =
            s.contains("additionalProperties") && s["additionalProperties"].is_object()
                ? &s["additionalProperties"]
                : nullptr;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (props && props->contains(it.key())) {
                if (!check(it.value(), (*props)[it.key()], path + "/" + it.key(), err))
                    return false;
            } else if (addl_schema) {
                if (!check(it.value(), *addl_schema, path + "/" + it.key(), err)) return false;
            } else if (!additional) {
                return fail("unexpected key '" + it.key() + "'");
            }
        }
    }
    if (v.is_array() && s.contains("items")) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!check(v[i], s["items"], path + "/" + std::to_string(i), err)) return false;
    }
    return true;
}

} // namespace

bool validate_json(const json& value, const json& schema, std::string* error) {
    return check(value, schema, "$", error);
}

} // namespace dgd
