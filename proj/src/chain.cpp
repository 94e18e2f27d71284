#include <array>
#include <string>

#include "vectorforge/svg_writer.hpp"

namespace vectorforge {

namespace {

// Clockwise on screen (y down): N, E, S, W.
constexpr std::array<SubPoint, 4> kCompass = {
    SubPoint{0, -1}, SubPoint{1, 0}, SubPoint{0, 1}, SubPoint{-1, 0}};

int compass_index(SubPoint d) {
    for (int k = 0; k < 4; ++k) {
        if (kCompass[k] == d) return k;
    }
    return -1;
}

[[noreturn]] void chain_failure(int region, const std::string& what) {
    throw ChainError("region " + std::to_string(region) + ": " + what);
}

}  // namespace

std::uint64_t BoundaryChainer::key(const Port& p) {
    // Coordinates range over [-1, 2^16 - 2].
    auto field = [](int v) { return static_cast<std::uint64_t>(static_cast<std::uint16_t>(v + 1)); };
    return (field(p.at.x) << 48) | (field(p.at.y) << 32) | (field(p.via.x) << 16) | field(p.via.y);
}

BoundaryChainer::BoundaryChainer(const TraceResult& trace, const SubpixelBoundaryImage& s,
                                 const LabelImage& labels)
    : trace_(trace), s_(s), labels_(labels) {
    for (const BoundaryPiece& piece : trace.pieces) {
        if (piece.start_port) ports_[key(*piece.start_port)].push_back({piece.id, false});
        if (piece.end_port) ports_[key(*piece.end_port)].push_back({piece.id, true});
    }
}

Port BoundaryChainer::tail_of(OrientedPiece p) const {
    const BoundaryPiece& piece = trace_.pieces[static_cast<std::size_t>(p.id)];
    return p.reversed ? *piece.start_port : *piece.end_port;
}

Port BoundaryChainer::head_of(OrientedPiece p) const {
    const BoundaryPiece& piece = trace_.pieces[static_cast<std::size_t>(p.id)];
    return p.reversed ? *piece.end_port : *piece.start_port;
}

int BoundaryChainer::side_of(int region, OrientedPiece p) const {
    const BoundaryPiece& piece = trace_.pieces[static_cast<std::size_t>(p.id)];
    const int side = piece.left_region == region ? piece.left_side : -piece.left_side;
    return p.reversed ? -side : side;
}

std::optional<OrientedPiece> BoundaryChainer::continuation(int region, const Port& tail,
                                                           PortRef arrived) const {
    Port wanted = tail;
    if (s_.junction(tail.at)) {
        // Turn from the arrival edge through the quadrants owned by `region`
        // to the next edge leaving the junction.
        const SubPoint j = tail.at;
        const int in = compass_index(tail.via - j);
        if (in < 0) return std::nullopt;
        const int i = (j.x - 1) / 2;
        const int k = (j.y - 1) / 2;
        // Quadrant pixel clockwise after each compass direction: NE, SE, SW, NW.
        const std::array<int, 4> quadrant = {labels_.at(i + 1, k), labels_.at(i + 1, k + 1),
                                             labels_.at(i, k + 1), labels_.at(i, k)};
        const int step = quadrant[static_cast<std::size_t>(in)] == region ? 1 : 3;
        int out = -1;
        for (int turn = 1; turn < 4; ++turn) {
            const int d = (in + step * turn) % 4;
            if (s_.edge(j + kCompass[static_cast<std::size_t>(d)])) {
                out = d;
                break;
            }
        }
        if (out < 0) return std::nullopt;
        wanted = Port{j, j + kCompass[static_cast<std::size_t>(out)]};
    }

    const auto it = ports_.find(key(wanted));
    if (it == ports_.end()) return std::nullopt;
    std::optional<OrientedPiece> found;
    for (const PortRef& ref : it->second) {
        if (ref.piece == arrived.piece && ref.at_end == arrived.at_end) continue;
        if (!trace_.pieces[static_cast<std::size_t>(ref.piece)].separates(region)) continue;
        if (found) return std::nullopt;
        // Entering through the end port means walking the piece backwards.
        found = OrientedPiece{ref.piece, ref.at_end};
    }
    return found;
}

std::vector<PieceLoop> BoundaryChainer::chain(int region) const {
    const auto& ids = trace_.neighbors[static_cast<std::size_t>(region)];
    std::unordered_map<int, bool> used;
    for (int id : ids) used[id] = false;

    std::vector<PieceLoop> loops;
    for (int id : ids) {
        if (used[id]) continue;
        used[id] = true;
        const BoundaryPiece& first = trace_.pieces[static_cast<std::size_t>(id)];
        if (!first.start_port) {
            loops.push_back({OrientedPiece{id, false}});
            continue;
        }
        OrientedPiece current{id, false};
        if (side_of(region, current) != 1) current.reversed = true;
        PieceLoop loop{current};
        const Port head = head_of(current);

        for (;;) {
            const Port tail = tail_of(current);
            const auto next = continuation(region, tail, PortRef{current.id, !current.reversed});
            if (!next) chain_failure(region, "no continuation after piece " + std::to_string(current.id));
            if (next->id == loop.front().id) {
                if (head_of(*next) != head || next->reversed != loop.front().reversed) {
                    chain_failure(region, "loop re-entered piece " + std::to_string(next->id));
                }
                break;
            }
            const auto u = used.find(next->id);
            if (u == used.end()) chain_failure(region, "piece " + std::to_string(next->id) + " not in neighbor list");
            if (u->second) chain_failure(region, "piece " + std::to_string(next->id) + " used twice");
            u->second = true;
            loop.push_back(*next);
            current = *next;
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

std::vector<PieceLoop> chain_pieces(int region, const TraceResult& trace,
                                    const SubpixelBoundaryImage& s, const LabelImage& labels) {
    return BoundaryChainer(trace, s, labels).chain(region);
}

}  // namespace vectorforge
