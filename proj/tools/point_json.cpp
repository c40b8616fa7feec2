#include "point_json.hpp"

#include "opcalc/text_util.hpp"

#include <stdexcept>

namespace opcalc::cli {

namespace {

Json node_to_json(const TextNode& n, bool b_point) {
    if (n.is_leaf) return Json{{"leaf", n.leaf}};
    Json j;
    if (b_point) {
        j["h"] = n.attrs.count("h") ? n.attrs.at("h") : "";
        j["label"] = point_text_to_json(n.label, false);
    } else {
        j["label"] = n.label;
        if (n.attrs.count("t")) j["t"] = n.attrs.at("t");
    }
    j["children"] = Json::array();
    for (const auto& c : n.children) j["children"].push_back(node_to_json(c, b_point));
    return j;
}

std::string require_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw std::invalid_argument(std::string("point JSON: vertex needs a string \"") + key + "\"");
    return j[key].get<std::string>();
}

std::string node_to_text(const Json& j, bool b_point) {
    if (!j.is_object()) throw std::invalid_argument("point JSON: expected an object");
    if (j.contains("leaf")) return "l" + std::to_string(j["leaf"].get<std::size_t>());
    std::string s = "(v";
    if (b_point) {
        s += ":h=" + require_string(j, "h");
        if (!j.contains("label")) throw std::invalid_argument("point JSON: vertex needs a \"label\"");
        s += " {" + point_json_to_text(j["label"], false) + "}";
    } else {
        if (j.contains("t")) s += ":t=" + require_string(j, "t");
        s += " {" + require_string(j, "label") + "}";
    }
    if (j.contains("children")) {
        if (!j["children"].is_array()) throw std::invalid_argument("point JSON: \"children\" must be an array");
        for (const auto& c : j["children"]) s += " " + node_to_text(c, b_point);
    }
    return s + ")";
}

}  // namespace

Json point_text_to_json(const std::string& text, bool b_point) { return node_to_json(parse_tree_text(text), b_point); }

std::string point_json_to_text(const Json& j, bool b_point) { return node_to_text(j, b_point); }

bool looks_like_json(const std::string& s) {
    const auto t = trim(s);
    return !t.empty() && t.front() == '{';
}

}  // namespace opcalc::cli
