#pragma once

#include <string>

#include "anim/scene.hpp"

namespace anim {

/// Parse and validate a .scene document (JSON, strict: unknown keys are
/// errors). Syntax errors report line/column; semantic errors report the
/// offending key path. Validation notes (for example two bindings on the
/// same track targeting one property) land in SceneDescription::warnings.
SceneDescription parse_scene_file(const std::string& text);

/// parse_scene_file + Scene construction with the builtin metrics.
Scene load_scene(const std::string& text);

/// Reads the file and loads it; io_error if unreadable.
Scene load_scene_path(const std::string& path);
SceneDescription parse_scene_path(const std::string& path);

} // namespace anim
