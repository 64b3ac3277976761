#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anim/interp.hpp"
#include "anim/easing.hpp"
#include "anim/geometry.hpp"
#include "anim/metrics.hpp"
#include "anim/render.hpp"
#include "anim/timeline.hpp"
#include "anim/typeset.hpp"

namespace anim {

enum class ObjectKind { segment, circle, bezier_stroke, text };

ObjectKind object_kind_from_name(const std::string& name);
const std::string& object_kind_name(ObjectKind kind);

/// One drawable. Numeric properties live in `props` (the frame state is a
/// fresh copy of them every frame); everything else is static configuration.
struct SceneObject {
    std::string id;
    ObjectKind kind = ObjectKind::segment;
    std::map<std::string, Value> props; // initial values of bindable properties
    bool arrow = false;                 // segment, bezier_stroke
    std::vector<Vec2> controls;         // bezier_stroke
    int resolution = 0;                 // bezier_stroke
    std::string text;                   // text: Nyka source
    double text_size = 0;               // text
    std::string mode = "up";            // text
};

/// value <- lerp(value, to, ease(easing, t_track)), applied in declaration
/// order during the calculation phase.
struct PropertyBinding {
    std::string object;
    std::string property;
    Value to;
    size_t track = 1; // 1-based
    EasingKind easing = EasingKind::linear;

    std::string target() const { return object + "." + property; }
};

/// A scene as data: everything needed to evaluate any frame.
struct SceneDescription {
    std::string name;
    Timeline timeline{{Track{1, 0, ""}}, 0};
    Viewport viewport = Viewport::standard();
    std::vector<SceneObject> objects;
    std::vector<PropertyBinding> bindings;
    std::vector<std::string> warnings; // validation notes, not errors
};

/// Frame export settings.
struct RenderConfig {
    double fps = 60;
    int width = 1920;
    int height = 1080;
    std::string out_dir;
    std::string frame_prefix = "frame_";
    bool show_debug_info = true;
    std::optional<std::pair<int, int>> frame_range; // inclusive, 0-based
    int jobs = 0;                                   // 0 = machine parallelism
};

/// Property values of every object at one instant, parallel to
/// SceneDescription::objects.
using PropertyState = std::vector<std::map<std::string, Value>>;

/// An immutable scene plus its precomputed artifacts (sampled strokes,
/// fragmented text). Evaluation is a pure function of `now`, so frames can
/// be rendered in any order, concurrently, with identical results.
class Scene {
public:
    /// Runs the setup phase (sampling strokes, fragmenting text with
    /// `metrics`), then the delayed-setup phase immediately if the metrics
    /// are ready.
    explicit Scene(SceneDescription desc, const GlyphMetrics& metrics = builtin_metrics());

    /// The second phase of the two-phase contract: re-fragments the text
    /// objects once real glyph metrics are available. Runs at most once.
    void delayed_setup(const GlyphMetrics& metrics);

    const SceneDescription& description() const { return desc_; }
    const Timeline& timeline() const { return desc_.timeline; }

    /// The calculation phase: reset state to setup values, then apply the
    /// bindings in declaration order.
    PropertyState state_at(double now) const;

    /// The rendering phase: draw every object, in declaration order, from
    /// the given state.
    void render_state(const PropertyState& state, FrameBuffer& fb) const;

    /// Full frame evaluation (calculation + rendering + optional overlay)
    /// into a fresh framebuffer.
    FrameBuffer frame_at(double now, const RenderConfig& cfg) const;

    const FragmentedString* fragments_of(const std::string& object_id) const;

private:
    SceneDescription desc_;
    std::vector<Stroke> strokes_;                // parallel to objects
    std::vector<FragmentedString> fragments_;    // parallel to objects
    bool delayed_setup_done_ = false;

    void setup(const GlyphMetrics& metrics);
};

/// The four worked examples, with their exact published parameters.
/// Names: line, circle, curved_arrow, text.
Scene builtin_scene(const std::string& name);
SceneDescription builtin_scene_description(const std::string& name);
const std::vector<std::string>& builtin_scene_names();

/// Frame file name for index k: prefix + zero-padded 5-digit k + ".png".
std::string frame_file_name(const std::string& prefix, int index);

/// Number of exported frames: ceil(total_duration * fps), sampled at k/fps.
int frame_count(const Timeline& tl, double fps);

/// Render the whole animation (or cfg.frame_range) to sequentially numbered
/// PNGs under cfg.out_dir. Returns the written paths in frame order.
/// Workers render frames independently; output does not depend on the job
/// count.
std::vector<std::string> render_animation(const Scene& scene, const RenderConfig& cfg);

} // namespace anim
