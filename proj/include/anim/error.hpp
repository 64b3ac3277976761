#pragma once

#include <stdexcept>
#include <string>

namespace anim {

/// Every failure the engine can report, as a machine-checkable code.
enum class errc {
    // timeline
    odd_length,
    non_positive_duration,
    negative_pause,
    negative_start_delay,
    empty_track_data,
    index_out_of_range,
    // easing
    unknown_easing,
    // interp
    shape_mismatch,
    // geometry
    resolution_too_small,
    too_few_controls,
    coincident_points,
    // typeset
    unbalanced_dollar,
    unbalanced_bracket,
    unknown_command,
    dangling_script,
    missing_argument,
    non_positive_size,
    unknown_mode,
    // scene files
    parse_error,
    track_out_of_range,
    unknown_object_type,
    unknown_property,
    unknown_scene,
    // rendering / io
    invalid_frame_range,
    io_error,
    // cli
    usage_error,
};

const char* errc_name(errc code);

/// Exception carrying one of the codes above plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace anim
