#include "anim/timeline.hpp"

#include <algorithm>

namespace anim {

Timeline::Timeline(std::vector<Track> tracks, double start_delay)
    : tracks_(std::move(tracks)), start_delay_(start_delay) {
    if (tracks_.empty())
        throw Error(errc::empty_track_data, "a timeline needs at least one track");
    if (!(start_delay_ >= 0))
        throw Error(errc::negative_start_delay, "startDelay must be >= 0, got " + std::to_string(start_delay_));
    starts_.reserve(tracks_.size());
    double acc = start_delay_;
    for (size_t i = 0; i < tracks_.size(); ++i) {
        const Track& tr = tracks_[i];
        if (!(tr.duration > 0))
            throw Error(errc::non_positive_duration,
                        "track " + std::to_string(i + 1) + " duration must be > 0, got " +
                            std::to_string(tr.duration));
        if (!(tr.pause >= 0))
            throw Error(errc::negative_pause,
                        "track " + std::to_string(i + 1) + " pause must be >= 0, got " +
                            std::to_string(tr.pause));
        starts_.push_back(acc);
        acc += tr.duration;
        acc += tr.pause;
    }
    total_ = acc;
}

Timeline Timeline::from_track_data(const std::vector<double>& flat, double start_delay) {
    if (flat.empty())
        throw Error(errc::empty_track_data, "trackData is empty");
    if (flat.size() % 2 != 0)
        throw Error(errc::odd_length,
                    "trackData has odd length " + std::to_string(flat.size()) +
                        "; every track, including the last, needs a pause");
    std::vector<Track> tracks;
    tracks.reserve(flat.size() / 2);
    for (size_t i = 0; i < flat.size(); i += 2)
        tracks.push_back(Track{flat[i], flat[i + 1], ""});
    return Timeline(std::move(tracks), start_delay);
}

double Timeline::track_start(size_t i) const {
    if (i < 1 || i > tracks_.size())
        throw Error(errc::index_out_of_range,
                    "track index " + std::to_string(i) + " not in [1, " +
                        std::to_string(tracks_.size()) + "]");
    return starts_[i - 1];
}

std::vector<double> Timeline::progress(double now) const {
    std::vector<double> out(tracks_.size());
    for (size_t i = 0; i < tracks_.size(); ++i)
        out[i] = std::clamp((now - starts_[i]) / tracks_[i].duration, 0.0, 1.0);
    return out;
}

} // namespace anim
