#include "anim/scene_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace anim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw Error(errc::parse_error, path + ": " + message);
}

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            fail(path + "." + key, "unknown key (strict mode)");
}

double number_at(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key))
        fail(path + "." + key, "missing required number");
    if (!obj[key].is_number())
        fail(path + "." + key, "expected a number");
    return obj[key].get<double>();
}

double number_or(const json& obj, const std::string& path, const std::string& key,
                 double fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number())
        fail(path + "." + key, "expected a number");
    return obj[key].get<double>();
}

std::string string_at(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key))
        fail(path + "." + key, "missing required string");
    if (!obj[key].is_string())
        fail(path + "." + key, "expected a string");
    return obj[key].get<std::string>();
}

Value value_from_json(const json& j, const std::string& path) {
    if (j.is_number())
        return Value(j.get<double>());
    if (j.is_array()) {
        std::vector<Value> items;
        items.reserve(j.size());
        for (size_t i = 0; i < j.size(); ++i)
            items.push_back(value_from_json(j[i], path + "[" + std::to_string(i) + "]"));
        return Value(std::move(items));
    }
    fail(path, "expected a number or a (nested) array of numbers");
}

Vec2 vec2_at(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key))
        fail(path + "." + key, "missing required point [x, y]");
    const json& j = obj[key];
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path + "." + key, "expected a point [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

void put_value_prop(SceneObject& obj, const json& src, const std::string& path,
                    const std::string& key, Value fallback) {
    if (src.contains(key))
        obj.props[key] = value_from_json(src[key], path + "." + key);
    else
        obj.props[key] = std::move(fallback);
}

Value point_value(Vec2 p) {
    return Value{Value(p.x), Value(p.y)};
}

SceneObject parse_object(const json& j, const std::string& path) {
    if (!j.is_object())
        fail(path, "expected an object");
    std::string type = string_at(j, path, "type");
    SceneObject obj;
    obj.id = string_at(j, path, "id");
    if (obj.id.empty())
        fail(path + ".id", "must not be empty");
    try {
        obj.kind = object_kind_from_name(type);
    } catch (const Error&) {
        throw Error(errc::unknown_object_type,
                    path + ".type: \"" + type +
                        "\" (known: segment, circle, bezier_stroke, text)");
    }

    const Value black{Value(0.0), Value(0.0), Value(0.0)};
    switch (obj.kind) {
    case ObjectKind::segment: {
        require_keys(j, path, {"id", "type", "a", "b", "size", "color", "alpha", "arrow",
                               "arrowsize"});
        obj.props["a"] = point_value(vec2_at(j, path, "a"));
        obj.props["b"] = point_value(vec2_at(j, path, "b"));
        put_value_prop(obj, j, path, "size", Value(4.0));
        put_value_prop(obj, j, path, "color", black);
        put_value_prop(obj, j, path, "alpha", Value(1.0));
        put_value_prop(obj, j, path, "arrowsize", Value(1.0));
        if (j.contains("arrow")) {
            if (!j["arrow"].is_boolean())
                fail(path + ".arrow", "expected a boolean");
            obj.arrow = j["arrow"].get<bool>();
        }
        break;
    }
    case ObjectKind::circle: {
        require_keys(j, path, {"id", "type", "center", "radius", "color", "alpha"});
        obj.props["center"] = point_value(vec2_at(j, path, "center"));
        obj.props["radius"] = Value(number_at(j, path, "radius"));
        put_value_prop(obj, j, path, "color", black);
        put_value_prop(obj, j, path, "alpha", Value(1.0));
        break;
    }
    case ObjectKind::bezier_stroke: {
        require_keys(j, path, {"id", "type", "controls", "resolution", "progress", "size",
                               "color", "alpha", "arrow", "arrowsize"});
        if (!j.contains("controls") || !j["controls"].is_array() || j["controls"].size() < 2)
            fail(path + ".controls", "expected an array of at least 2 points");
        for (size_t i = 0; i < j["controls"].size(); ++i) {
            const json& p = j["controls"][i];
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
                fail(path + ".controls[" + std::to_string(i) + "]", "expected a point [x, y]");
            obj.controls.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        double res = number_at(j, path, "resolution");
        obj.resolution = static_cast<int>(res);
        if (obj.resolution != res || obj.resolution < 2)
            fail(path + ".resolution", "expected an integer >= 2");
        put_value_prop(obj, j, path, "progress", Value(0.0));
        put_value_prop(obj, j, path, "size", Value(4.0));
        put_value_prop(obj, j, path, "color", black);
        put_value_prop(obj, j, path, "alpha", Value(1.0));
        put_value_prop(obj, j, path, "arrowsize", Value(1.0));
        if (j.contains("arrow")) {
            if (!j["arrow"].is_boolean())
                fail(path + ".arrow", "expected a boolean");
            obj.arrow = j["arrow"].get<bool>();
        }
        break;
    }
    case ObjectKind::text: {
        require_keys(j, path, {"id", "type", "anchor", "string", "textSize", "mode",
                               "progress", "color", "alpha"});
        obj.props["anchor"] = point_value(vec2_at(j, path, "anchor"));
        obj.text = string_at(j, path, "string");
        obj.text_size = number_at(j, path, "textSize");
        if (!(obj.text_size > 0))
            fail(path + ".textSize", "must be > 0");
        if (j.contains("mode")) {
            obj.mode = string_at(j, path, "mode");
            if (obj.mode != "up" && obj.mode != "fade" && obj.mode != "appear")
                fail(path + ".mode", "expected one of up, fade, appear");
        }
        put_value_prop(obj, j, path, "progress", Value(0.0));
        put_value_prop(obj, j, path, "color", black);
        put_value_prop(obj, j, path, "alpha", Value(1.0));
        break;
    }
    }
    return obj;
}

std::pair<int, int> line_col_of(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

SceneDescription parse_scene_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(errc::parse_error, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + e.what());
    }
    if (!doc.is_object())
        fail("$", "expected a JSON object");
    require_keys(doc, "$", {"name", "startDelay", "tracks", "viewport", "objects",
                            "bindings"});

    SceneDescription desc;
    if (doc.contains("name"))
        desc.name = string_at(doc, "$", "name");

    double start_delay = number_or(doc, "$", "startDelay", 0.0);

    if (!doc.contains("tracks") || !doc["tracks"].is_array() || doc["tracks"].empty())
        fail("$.tracks", "expected a non-empty array of tracks");
    std::vector<Track> tracks;
    for (size_t i = 0; i < doc["tracks"].size(); ++i) {
        const json& t = doc["tracks"][i];
        std::string path = "$.tracks[" + std::to_string(i) + "]";
        if (!t.is_object())
            fail(path, "expected an object {duration, pause, label?}");
        require_keys(t, path, {"duration", "pause", "label"});
        Track track;
        track.duration = number_at(t, path, "duration");
        track.pause = number_at(t, path, "pause");
        if (t.contains("label"))
            track.label = string_at(t, path, "label");
        tracks.push_back(std::move(track));
    }
    desc.timeline = Timeline(std::move(tracks), start_delay);

    if (doc.contains("viewport")) {
        const json& v = doc["viewport"];
        if (!v.is_object())
            fail("$.viewport", "expected an object {xMin, xMax, yMin, yMax}");
        require_keys(v, "$.viewport", {"xMin", "xMax", "yMin", "yMax"});
        desc.viewport.x_min = number_at(v, "$.viewport", "xMin");
        desc.viewport.x_max = number_at(v, "$.viewport", "xMax");
        desc.viewport.y_min = number_at(v, "$.viewport", "yMin");
        desc.viewport.y_max = number_at(v, "$.viewport", "yMax");
        if (!(desc.viewport.x_max > desc.viewport.x_min) ||
            !(desc.viewport.y_max > desc.viewport.y_min))
            fail("$.viewport", "xMax/yMax must exceed xMin/yMin");
    }

    if (!doc.contains("objects") || !doc["objects"].is_array())
        fail("$.objects", "expected an array of objects");
    std::set<std::string> ids;
    for (size_t i = 0; i < doc["objects"].size(); ++i) {
        SceneObject obj = parse_object(doc["objects"][i],
                                       "$.objects[" + std::to_string(i) + "]");
        if (!ids.insert(obj.id).second)
            fail("$.objects[" + std::to_string(i) + "].id",
                 "duplicate object id \"" + obj.id + "\"");
        desc.objects.push_back(std::move(obj));
    }

    if (doc.contains("bindings")) {
        if (!doc["bindings"].is_array())
            fail("$.bindings", "expected an array of bindings");
        std::set<std::pair<std::string, size_t>> seen;
        for (size_t i = 0; i < doc["bindings"].size(); ++i) {
            const json& b = doc["bindings"][i];
            std::string path = "$.bindings[" + std::to_string(i) + "]";
            if (!b.is_object())
                fail(path, "expected an object {target, to, track, easing?}");
            require_keys(b, path, {"target", "to", "track", "easing"});

            PropertyBinding binding;
            std::string target = string_at(b, path, "target");
            size_t dot = target.find('.');
            if (dot == std::string::npos || dot == 0 || dot + 1 >= target.size())
                fail(path + ".target", "expected \"objectId.property\", got \"" + target +
                                           "\"");
            binding.object = target.substr(0, dot);
            binding.property = target.substr(dot + 1);

            const SceneObject* obj = nullptr;
            for (const SceneObject& o : desc.objects)
                if (o.id == binding.object)
                    obj = &o;
            if (!obj)
                throw Error(errc::unknown_property,
                            path + ".target: no object with id \"" + binding.object + "\"");
            auto prop = obj->props.find(binding.property);
            if (prop == obj->props.end())
                throw Error(errc::unknown_property,
                            path + ".target: " + object_kind_name(obj->kind) +
                                " has no bindable property \"" + binding.property + "\"");

            if (!b.contains("to"))
                fail(path + ".to", "missing target value");
            binding.to = value_from_json(b["to"], path + ".to");
            if (!shape_compatible(prop->second, binding.to))
                throw Error(errc::shape_mismatch,
                            path + ".to: shape " + shape_string(binding.to) +
                                " does not match " + binding.target() + " (" +
                                shape_string(prop->second) + ")");

            double track = number_at(b, path, "track");
            if (track != static_cast<size_t>(track) || track < 1 ||
                track > desc.timeline.track_count())
                throw Error(errc::track_out_of_range,
                            path + ".track: " + std::to_string(static_cast<long>(track)) +
                                " not in [1, " + std::to_string(desc.timeline.track_count()) +
                                "]");
            binding.track = static_cast<size_t>(track);

            if (b.contains("easing")) {
                std::string name = string_at(b, path, "easing");
                try {
                    binding.easing = easing_from_name(name);
                } catch (const Error&) {
                    throw Error(errc::unknown_easing,
                                path + ".easing: \"" + name + "\" is not in the catalog");
                }
            }

            if (!seen.insert({target, binding.track}).second)
                desc.warnings.push_back("bindings[" + std::to_string(i) + "]: " + target +
                                        " is bound more than once on track " +
                                        std::to_string(binding.track) +
                                        "; both apply in order");
            desc.bindings.push_back(std::move(binding));
        }
    }
    return desc;
}

Scene load_scene(const std::string& text) {
    return Scene(parse_scene_file(text));
}

SceneDescription parse_scene_path(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(errc::io_error, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_scene_file(ss.str());
}

Scene load_scene_path(const std::string& path) {
    return Scene(parse_scene_path(path));
}

} // namespace anim
