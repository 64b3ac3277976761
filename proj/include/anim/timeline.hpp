#pragma once

#include <string>
#include <vector>

#include "anim/error.hpp"

namespace anim {

/// One animation track: how long it runs and how long the pause after it
/// lasts. The label carries the planning comment, if any.
struct Track {
    double duration = 1.0; // seconds, > 0
    double pause = 0.0;    // seconds, >= 0
    std::string label;
};

/// An ordered list of non-overlapping tracks behind a start delay.
/// Immutable after construction; all queries are pure.
class Timeline {
public:
    Timeline(std::vector<Track> tracks, double start_delay = 0.0);

    /// Builds a timeline from the alternating duration/pause list
    /// [d1, p1, d2, p2, ...]. The list must have even, nonzero length:
    /// every track, including the last, carries a pause.
    static Timeline from_track_data(const std::vector<double>& flat, double start_delay = 0.0);

    size_t track_count() const { return tracks_.size(); }
    const std::vector<Track>& tracks() const { return tracks_; }
    double start_delay() const { return start_delay_; }

    /// Absolute start time of track i (1-based):
    /// startDelay + sum of (duration + pause) of all earlier tracks.
    double track_start(size_t i) const;

    /// startDelay + sum over all tracks of duration + pause, final pause
    /// included. Accumulated left to right, so the value is deterministic.
    double total_duration() const { return total_; }

    /// Progress of every track at time `now`, each clamped to [0, 1].
    /// Element i is clamp((now - track_start(i)) / duration_i, 0, 1).
    std::vector<double> progress(double now) const;

private:
    std::vector<Track> tracks_;
    double start_delay_ = 0.0;
    std::vector<double> starts_; // per track, precomputed left to right
    double total_ = 0.0;
};

} // namespace anim
