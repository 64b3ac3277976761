#include "anim/scene.hpp"

namespace anim {

namespace {

Value point(double x, double y) {
    return Value{Value(x), Value(y)};
}

Value rgb(double r, double g, double b) {
    return Value{Value(r), Value(g), Value(b)};
}

// A segment growing from a to b while its stroke width fades in.
SceneDescription line_description() {
    SceneDescription desc;
    desc.name = "line";
    desc.timeline = Timeline({Track{2, 0.5, ""}}, 0.5);
    SceneObject line;
    line.id = "line";
    line.kind = ObjectKind::segment;
    line.props["a"] = point(-3, 7);
    line.props["b"] = point(-3, 7);
    line.props["size"] = Value(0.0);
    line.props["color"] = rgb(0, 0, 0);
    line.props["alpha"] = Value(1.0);
    line.props["arrowsize"] = Value(1.0);
    desc.objects.push_back(std::move(line));
    desc.bindings = {
        {"line", "b", point(5, 10), 1, EasingKind::inOutCubic},
        {"line", "size", Value(10.0), 1, EasingKind::outCirc},
    };
    return desc;
}

// Appear, move right, recolor, then move back, shrink and recolor at once.
SceneDescription circle_description() {
    SceneDescription desc;
    desc.name = "circle";
    desc.timeline = Timeline(
        {
            Track{1, 0.5, "create circle"},
            Track{1, 0.5, "move circle"},
            Track{1, 0.5, "recolor circle"},
            Track{1, 0.5, "move, scale and recolor circle"},
        },
        0.5);
    Vec2 center = desc.viewport.center();
    SceneObject circle;
    circle.id = "circle";
    circle.kind = ObjectKind::circle;
    circle.props["center"] = point(center.x, center.y);
    circle.props["radius"] = Value(0.0);
    circle.props["color"] = rgb(0.8, 0.2, 0.3);
    circle.props["alpha"] = Value(1.0);
    desc.objects.push_back(std::move(circle));
    desc.bindings = {
        {"circle", "radius", Value(3.0), 1, EasingKind::outBack},
        {"circle", "center", point(center.x + 10, center.y), 2, EasingKind::inOutCubic},
        {"circle", "color", rgb(0.3, 0.2, 0.8), 3, EasingKind::linear},
        {"circle", "radius", Value(1.0), 4, EasingKind::inOutBack},
        {"circle", "center", point(center.x, center.y), 4, EasingKind::inOutCubic},
        {"circle", "color", rgb(0.3, 0.8, 0.2), 4, EasingKind::linear},
    };
    return desc;
}

// A Bezier stroke drawn progressively, tipped with a growing arrowhead.
SceneDescription curved_arrow_description() {
    SceneDescription desc;
    desc.name = "curved_arrow";
    desc.timeline = Timeline({Track{1.5, 0.5, ""}}, 0.5);
    SceneObject stroke;
    stroke.id = "arrow";
    stroke.kind = ObjectKind::bezier_stroke;
    stroke.controls = {{8, 12}, {0, 15}, {10, 4}, {-2, 4}};
    stroke.resolution = 256;
    stroke.arrow = true;
    stroke.props["progress"] = Value(0.0);
    stroke.props["size"] = Value(0.0);
    stroke.props["color"] = rgb(0, 0, 0);
    stroke.props["alpha"] = Value(1.0);
    stroke.props["arrowsize"] = Value(0.0);
    desc.objects.push_back(std::move(stroke));
    desc.bindings = {
        {"arrow", "progress", Value(1.0), 1, EasingKind::inOutCubic},
        {"arrow", "size", Value(5.0), 1, EasingKind::outCirc},
        {"arrow", "arrowsize", Value(2.0), 1, EasingKind::linear},
    };
    return desc;
}

// Typewriter text; the track duration comes from the fragment count so all
// text types at the same speed.
SceneDescription text_description() {
    constexpr double text_size = 30;
    constexpr double typing_speed = 10;
    const std::string string =
        "This is $\\displaystyle \\sum[i=0][\\infty]q^i = \\frac{1}{1-q}$ plus text.";

    double duration =
        static_cast<double>(fragment_length(fragment(string, text_size))) / typing_speed;

    SceneDescription desc;
    desc.name = "text";
    desc.timeline = Timeline({Track{duration, 0.3, ""}}, 0.5);
    SceneObject text;
    text.id = "text";
    text.kind = ObjectKind::text;
    text.text = string;
    text.text_size = text_size;
    text.mode = "up";
    text.props["anchor"] = point(-5, 12);
    text.props["progress"] = Value(0.0);
    text.props["color"] = rgb(0.8, 0.2, 0.3);
    text.props["alpha"] = Value(1.0);
    desc.objects.push_back(std::move(text));
    desc.bindings = {
        {"text", "progress", Value(1.0), 1, EasingKind::linear},
    };
    return desc;
}

} // namespace

const std::vector<std::string>& builtin_scene_names() {
    static const std::vector<std::string> names = {"line", "circle", "curved_arrow",
                                                   "text"};
    return names;
}

SceneDescription builtin_scene_description(const std::string& name) {
    if (name == "line")
        return line_description();
    if (name == "circle")
        return circle_description();
    if (name == "curved_arrow")
        return curved_arrow_description();
    if (name == "text")
        return text_description();
    throw Error(errc::unknown_scene, "\"" + name + "\" (builtins: line, circle, "
                                     "curved_arrow, text)");
}

Scene builtin_scene(const std::string& name) {
    return Scene(builtin_scene_description(name));
}

} // namespace anim
