#include "schema_check.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

namespace schema_check {

namespace {

using nlohmann::json;

bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    throw std::runtime_error("unknown schema type " + t);
}

class Validator {
public:
    explicit Validator(const json& root) : root_(root) {}

    void check(const json& s, const json& v, const std::string& path, std::vector<std::string>& errors) const {
        if (s.is_boolean()) {
            if (!s.get<bool>()) {
                errors.push_back(path + ": not allowed");
            }
            return;
        }
        if (s.contains("$ref")) {
            check(resolve(s["$ref"].get<std::string>()), v, path, errors);
        }
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"]) {
                    ok = ok || has_type(v, t.get<std::string>());
                }
            } else {
                ok = has_type(v, s["type"].get<std::string>());
            }
            if (!ok) {
                errors.push_back(path + ": wrong type");
                return;
            }
        }
        if (s.contains("const") && v != s["const"]) {
            errors.push_back(path + ": expected " + s["const"].dump());
        }
        if (s.contains("enum")) {
            bool found = false;
            for (const auto& e : s["enum"]) {
                found = found || e == v;
            }
            if (!found) {
                errors.push_back(path + ": " + v.dump() + " not in enum");
            }
        }
        if (s.contains("pattern") && v.is_string() &&
            !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>()))) {
            errors.push_back(path + ": pattern mismatch");
        }
        if (v.is_object()) {
            if (s.contains("required")) {
                for (const auto& k : s["required"]) {
                    if (!v.contains(k.get<std::string>())) {
                        errors.push_back(path + ": missing " + k.get<std::string>());
                    }
                }
            }
            for (const auto& [key, value] : v.items()) {
                if (s.contains("properties") && s["properties"].contains(key)) {
                    check(s["properties"][key], value, path + "/" + key, errors);
                } else if (s.contains("additionalProperties")) {
                    check(s["additionalProperties"], value, path + "/" + key, errors);
                }
            }
        }
        if (v.is_array() && s.contains("items")) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                check(s["items"], v[i], path + "/" + std::to_string(i), errors);
            }
        }
        if (s.contains("allOf")) {
            for (const auto& sub : s["allOf"]) {
                check(sub, v, path, errors);
            }
        }
        if (s.contains("anyOf")) {
            bool any = false;
            for (const auto& sub : s["anyOf"]) {
                std::vector<std::string> local;
                check(sub, v, path, local);
                any = any || local.empty();
            }
            if (!any) {
                errors.push_back(path + ": no anyOf branch matches");
            }
        }
        if (s.contains("if")) {
            std::vector<std::string> local;
            check(s["if"], v, path, local);
            if (local.empty() && s.contains("then")) {
                check(s["then"], v, path, errors);
            }
        }
    }

private:
    const json& resolve(const std::string& ref) const {
        if (ref.rfind("#/", 0) != 0) {
            throw std::runtime_error("unsupported $ref " + ref);
        }
        return root_.at(json::json_pointer(ref.substr(1)));
    }

    const json& root_;
};

} // namespace

std::vector<std::string> validate(const nlohmann::json& schema, const nlohmann::json& doc) {
    std::vector<std::string> errors;
    Validator(schema).check(schema, doc, "", errors);
    return errors;
}

nlohmann::json report_schema() {
    std::ifstream in(CANTORLAB_SCHEMA_PATH);
    if (!in) {
        throw std::runtime_error("cannot open " CANTORLAB_SCHEMA_PATH);
    }
    return nlohmann::json::parse(in);
}

} // namespace schema_check
