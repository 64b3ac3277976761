#include "anim/scene.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "anim/png_io.hpp"

namespace anim {

namespace {

Vec2 as_vec2(const Value& v, const std::string& what) {
    if (v.is_scalar() || v.size() != 2 || !v.items()[0].is_scalar() ||
        !v.items()[1].is_scalar())
        throw Error(errc::shape_mismatch, what + " must be a point [x, y]");
    return {v.items()[0].scalar(), v.items()[1].scalar()};
}

Color as_color(const Value& v, const std::string& what) {
    if (v.is_scalar() || v.size() != 3)
        throw Error(errc::shape_mismatch, what + " must be a color [r, g, b]");
    for (const Value& c : v.items())
        if (!c.is_scalar())
            throw Error(errc::shape_mismatch, what + " must be a color [r, g, b]");
    return {v.items()[0].scalar(), v.items()[1].scalar(), v.items()[2].scalar()};
}

double as_scalar(const Value& v, const std::string& what) {
    if (!v.is_scalar())
        throw Error(errc::shape_mismatch, what + " must be a number");
    return v.scalar();
}

double get_scalar(const std::map<std::string, Value>& props, const std::string& name,
                  const std::string& id) {
    return as_scalar(props.at(name), id + "." + name);
}

Style style_from(const std::map<std::string, Value>& props, const SceneObject& obj) {
    Style style;
    if (auto it = props.find("size"); it != props.end())
        style.size = as_scalar(it->second, obj.id + ".size");
    if (auto it = props.find("color"); it != props.end())
        style.color = as_color(it->second, obj.id + ".color");
    if (auto it = props.find("alpha"); it != props.end())
        style.alpha = as_scalar(it->second, obj.id + ".alpha");
    if (auto it = props.find("arrowsize"); it != props.end())
        style.arrowsize = as_scalar(it->second, obj.id + ".arrowsize");
    style.arrow = obj.arrow;
    return style;
}

} // namespace

ObjectKind object_kind_from_name(const std::string& name) {
    if (name == "segment") return ObjectKind::segment;
    if (name == "circle") return ObjectKind::circle;
    if (name == "bezier_stroke") return ObjectKind::bezier_stroke;
    if (name == "text") return ObjectKind::text;
    throw Error(errc::unknown_object_type, "\"" + name + "\"");
}

const std::string& object_kind_name(ObjectKind kind) {
    static const std::vector<std::string> names = {"segment", "circle", "bezier_stroke",
                                                   "text"};
    return names[static_cast<size_t>(kind)];
}

Scene::Scene(SceneDescription desc, const GlyphMetrics& metrics) : desc_(std::move(desc)) {
    setup(metrics);
    if (metrics.ready())
        delayed_setup(metrics);
}

void Scene::setup(const GlyphMetrics& metrics) {
    strokes_.resize(desc_.objects.size());
    fragments_.resize(desc_.objects.size());
    for (size_t i = 0; i < desc_.objects.size(); ++i) {
        const SceneObject& obj = desc_.objects[i];
        if (obj.kind == ObjectKind::bezier_stroke)
            strokes_[i] = sample_bezier_curve(obj.controls, obj.resolution);
        else if (obj.kind == ObjectKind::text)
            fragments_[i] = fragment(obj.text, obj.text_size, metrics);
    }
}

void Scene::delayed_setup(const GlyphMetrics& metrics) {
    if (delayed_setup_done_)
        return;
    delayed_setup_done_ = true;
    for (size_t i = 0; i < desc_.objects.size(); ++i)
        if (desc_.objects[i].kind == ObjectKind::text)
            fragments_[i] = fragment(desc_.objects[i].text, desc_.objects[i].text_size,
                                     metrics);
}

PropertyState Scene::state_at(double now) const {
    PropertyState state;
    state.reserve(desc_.objects.size());
    for (const SceneObject& obj : desc_.objects)
        state.push_back(obj.props);

    std::vector<double> progress = desc_.timeline.progress(now);
    for (const PropertyBinding& binding : desc_.bindings) {
        size_t idx = 0;
        for (; idx < desc_.objects.size(); ++idx)
            if (desc_.objects[idx].id == binding.object)
                break;
        if (idx == desc_.objects.size())
            throw Error(errc::unknown_property, "binding target " + binding.target());
        auto it = state[idx].find(binding.property);
        if (it == state[idx].end())
            throw Error(errc::unknown_property, "binding target " + binding.target());
        double t = progress[binding.track - 1];
        try {
            it->second = lerp(it->second, binding.to, ease(binding.easing, t));
        } catch (const Error& e) {
            throw Error(errc::shape_mismatch,
                        "binding " + binding.target() + ": " + e.what());
        }
    }
    return state;
}

void Scene::render_state(const PropertyState& state, FrameBuffer& fb) const {
    for (size_t i = 0; i < desc_.objects.size(); ++i) {
        const SceneObject& obj = desc_.objects[i];
        const std::map<std::string, Value>& props = state[i];
        Style style = style_from(props, obj);
        Viewport vp = desc_.viewport.fitted(fb.width(), fb.height());
        switch (obj.kind) {
        case ObjectKind::segment: {
            Vec2 a = as_vec2(props.at("a"), obj.id + ".a");
            Vec2 b = as_vec2(props.at("b"), obj.id + ".b");
            draw_segment(fb, vp, a, b, style);
            break;
        }
        case ObjectKind::circle: {
            Vec2 center = as_vec2(props.at("center"), obj.id + ".center");
            double radius = get_scalar(props, "radius", obj.id);
            fill_circle(fb, vp, center, radius, style);
            break;
        }
        case ObjectKind::bezier_stroke: {
            double progress = get_scalar(props, "progress", obj.id);
            int idx = stroke_index(obj.resolution, std::clamp(progress, 0.0, 1.0));
            const std::vector<Vec2>& pts = strokes_[i].points;
            std::vector<Vec2> prefix(pts.begin(), pts.begin() + idx);
            Style stroke_style = style;
            stroke_style.arrow = false;
            connect(fb, vp, prefix, stroke_style);
            if (obj.arrow && idx >= 2) {
                // The paper draws the tip segment a second time, with the
                // arrow modifier, on top of the connect pass.
                draw_segment(fb, vp, pts[idx - 2], pts[idx - 1], style);
            }
            break;
        }
        case ObjectKind::text: {
            Vec2 anchor = as_vec2(props.at("anchor"), obj.id + ".anchor");
            double progress = get_scalar(props, "progress", obj.id);
            draw_fragments(fb, vp, anchor, fragments_[i],
                           std::clamp(progress, 0.0, 1.0), obj.mode, style);
            break;
        }
        }
    }
}

FrameBuffer Scene::frame_at(double now, const RenderConfig& cfg) const {
    FrameBuffer fb(cfg.width, cfg.height);
    PropertyState state = state_at(now);
    render_state(state, fb);
    if (cfg.show_debug_info)
        draw_debug_overlay(fb, desc_.timeline, now);
    return fb;
}

const FragmentedString* Scene::fragments_of(const std::string& object_id) const {
    for (size_t i = 0; i < desc_.objects.size(); ++i)
        if (desc_.objects[i].id == object_id)
            return &fragments_[i];
    return nullptr;
}

std::string frame_file_name(const std::string& prefix, int index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%05d", index);
    return prefix + buf + ".png";
}

int frame_count(const Timeline& tl, double fps) {
    return static_cast<int>(std::ceil(tl.total_duration() * fps));
}

std::vector<std::string> render_animation(const Scene& scene, const RenderConfig& cfg) {
    if (!(cfg.fps > 0) || cfg.width <= 0 || cfg.height <= 0)
        throw Error(errc::usage_error, "fps and dimensions must be positive");
    int total = frame_count(scene.timeline(), cfg.fps);
    int first = 0, last = total - 1;
    if (cfg.frame_range) {
        first = cfg.frame_range->first;
        last = cfg.frame_range->second;
        if (first < 0 || last < first || last >= total)
            throw Error(errc::invalid_frame_range,
                        std::to_string(first) + ".." + std::to_string(last) +
                            " outside 0.." + std::to_string(total - 1));
    }

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec)
        throw Error(errc::io_error, "cannot create " + cfg.out_dir + ": " + ec.message());

    int count = last - first + 1;
    std::vector<std::string> paths(count);
    unsigned jobs = cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(count));

    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                int k = first + i;
                FrameBuffer fb = scene.frame_at(k / cfg.fps, cfg);
                std::string path = (std::filesystem::path(cfg.out_dir) /
                                    frame_file_name(cfg.frame_prefix, k))
                                       .string();
                write_file(path, encode_png(fb));
                paths[i] = std::move(path);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j)
            threads.emplace_back(worker);
        for (std::thread& th : threads)
            th.join();
    }
    if (error)
        std::rethrow_exception(error);
    return paths;
}

} // namespace anim
