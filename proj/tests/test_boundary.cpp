#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "support.hpp"
#include "vectorforge/boundary.hpp"

using namespace vectorforge;
using vftest::labels_of;

namespace {

std::set<std::pair<int, int>> set_points(const SubpixelBoundaryImage& s, bool junctions = false) {
    std::set<std::pair<int, int>> out;
    for (int y = 0; y < s.height_s; ++y)
        for (int x = 0; x < s.width_s; ++x)
            if (junctions ? s.junction(x, y) : s.edge(x, y)) out.insert({x, y});
    return out;
}

using PointSet = std::set<std::pair<int, int>>;

LabelImage five_by_five_block() {
    return labels_of({{0, 0, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 1, 1, 1, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 0, 0}});
}

bool eight_connected(SubPoint a, SubPoint b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)) == 1;
}

}  // namespace

TEST(BuildSubpixelEdges, TwoRowSplit) {
    const auto s = build_subpixel_edges(labels_of({{1, 1}, {2, 2}}));
    EXPECT_EQ(s.width_s, 3);
    EXPECT_EQ(s.height_s, 3);
    EXPECT_EQ(set_points(s), (PointSet{{0, 1}, {2, 1}}));
    EXPECT_TRUE(set_points(s, true).empty());
}

TEST(BuildSubpixelEdges, FourDistinctLabels) {
    const auto s = build_subpixel_edges(labels_of({{1, 2}, {3, 4}}));
    EXPECT_EQ(set_points(s), (PointSet{{1, 0}, {1, 2}, {0, 1}, {2, 1}}));
}

TEST(BuildSubpixelEdges, SingleRegionHasNoEdges) {
    const auto s = build_subpixel_edges(labels_of({{3, 3, 3}, {3, 3, 3}}));
    EXPECT_TRUE(set_points(s).empty());
}

TEST(FillGaps, Examples) {
    EXPECT_EQ(set_points(fill_gaps(build_subpixel_edges(labels_of({{1, 1}, {2, 2}})))),
              (PointSet{{0, 1}, {1, 1}, {2, 1}}));
    EXPECT_EQ(set_points(fill_gaps(build_subpixel_edges(labels_of({{1, 2}, {3, 4}})))),
              (PointSet{{1, 0}, {1, 2}, {0, 1}, {2, 1}, {1, 1}}));
    EXPECT_TRUE(set_points(fill_gaps(build_subpixel_edges(labels_of({{0, 0}})))).empty());
}

TEST(MarkJunctions, Examples) {
    EXPECT_EQ(set_points(extract_junctions(labels_of({{1, 2}, {3, 4}})), true), (PointSet{{1, 1}}));
    EXPECT_TRUE(set_points(extract_junctions(labels_of({{1, 1}, {2, 2}})), true).empty());
    EXPECT_TRUE(set_points(extract_junctions(labels_of({{1, 2}, {1, 2}})), true).empty());
    EXPECT_TRUE(set_points(extract_junctions(labels_of({{7}})), true).empty());
}

TEST(ExtractJunctions, MatchesBruteForceOnRandomLabels) {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const int w = 1 + trial % 8, h = 1 + (trial / 8) % 8;
        const LabelImage L = vftest::random_labels(rng, w, h, 2 + trial % 4, trial % 2 == 0);
        const auto oracle = vftest::brute_force_s(L);
        for (unsigned workers : {1u, 3u}) {
            const auto s = extract_junctions(L, workers);
            ASSERT_EQ(s.width_s, oracle.ws);
            ASSERT_EQ(s.height_s, oracle.hs);
            for (int y = 0; y < s.height_s; ++y)
                for (int x = 0; x < s.width_s; ++x) {
                    ASSERT_EQ(int(s.edge(x, y)), oracle.edge[y * oracle.ws + x]) << x << "," << y;
                    ASSERT_EQ(int(s.junction(x, y)), oracle.junction[y * oracle.ws + x]) << x << "," << y;
                }
        }
    }
}

TEST(SubpixelInvariants, PixelCentersNeverSetAndJunctionsAreEdges) {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const LabelImage L = vftest::random_labels(rng, 2 + trial % 9, 2 + trial % 6, 3, true);
        const auto s = extract_junctions(L);
        for (int y = 0; y < s.height_s; ++y)
            for (int x = 0; x < s.width_s; ++x) {
                if (x % 2 == 0 && y % 2 == 0) EXPECT_FALSE(s.edge(x, y));
                if (s.junction(x, y)) {
                    EXPECT_TRUE(x % 2 == 1 && y % 2 == 1);
                    EXPECT_TRUE(s.edge(x, y));
                }
            }
    }
}

TEST(TracePieces, FourLabelsMeetAtOneJunction) {
    const auto L = labels_of({{1, 2}, {3, 4}});
    const auto s = extract_junctions(L);
    const auto t = trace_pieces(s, L);
    ASSERT_EQ(t.pieces.size(), 4u);
    // Junction first, then E, S, W, N.
    const std::vector<SubPoint> second = {{2, 1}, {1, 2}, {0, 1}, {1, 0}};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& p = t.pieces[i];
        ASSERT_EQ(p.points.size(), 2u);
        EXPECT_EQ(p.points[0], (SubPoint{1, 1}));
        EXPECT_EQ(p.points[1], second[i]);
        // Junction to image border.
        EXPECT_EQ(p.kind, PieceKind::border);
        EXPECT_NE(p.left_region, p.right_region);
    }
    for (const auto& n : t.neighbors) EXPECT_EQ(n.size(), 2u);
    EXPECT_TRUE(t.closed_ids.empty());
}

TEST(TracePieces, SingleRegionHasNoPieces) {
    const auto L = labels_of({{0, 0, 0}, {0, 0, 0}});
    const auto t = trace_pieces(extract_junctions(L), L);
    EXPECT_TRUE(t.pieces.empty());
    ASSERT_EQ(t.neighbors.size(), 1u);
    EXPECT_TRUE(t.neighbors[0].empty());
}

TEST(TracePieces, CenteredBlockIsOneClosedPiece) {
    const auto L = five_by_five_block();
    const auto s = extract_junctions(L);
    const auto t = trace_pieces(s, L);
    ASSERT_EQ(t.pieces.size(), 1u);
    ASSERT_EQ(t.closed_ids, (std::vector<int>{0}));
    const auto& p = t.pieces[0];
    EXPECT_EQ(p.kind, PieceKind::closed);
    // 12 pixel-edge midpoints plus 8 gap-filled corners along the straight sides.
    const auto oracle = vftest::brute_force_s(L);
    EXPECT_EQ(p.points.size(), static_cast<std::size_t>(std::count(oracle.edge.begin(), oracle.edge.end(), 1)));
    EXPECT_EQ(p.points.size(), 20u);
    for (std::size_t i = 0; i < p.points.size(); ++i)
        EXPECT_TRUE(eight_connected(p.points[i], p.points[(i + 1) % p.points.size()]));
    EXPECT_TRUE(t.neighbors[0].empty());
    EXPECT_TRUE(t.neighbors[1].empty());
}

TEST(TracePieces, PartitionAndNeighborListsOnRandomLabels) {
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 150; ++trial) {
        const int w = 1 + trial % 10, h = 1 + (trial * 3) % 9;
        const LabelImage L = vftest::random_labels(rng, w, h, 2 + trial % 5, trial % 3 != 0);
        const auto s = extract_junctions(L);
        const auto t = trace_pieces(s, L);

        std::map<std::pair<int, int>, int> uses;
        for (const auto& piece : t.pieces) {
            ASSERT_NE(piece.left_region, piece.right_region);
            ASSERT_FALSE(piece.points.empty());
            for (std::size_t i = 0; i + 1 < piece.points.size(); ++i)
                ASSERT_TRUE(eight_connected(piece.points[i], piece.points[i + 1]));
            for (const auto& p : piece.points) ++uses[{p.x, p.y}];
            if (piece.kind == PieceKind::open) {
                EXPECT_TRUE(s.junction(piece.points.front()));
                EXPECT_TRUE(s.junction(piece.points.back()));
            }
            if (piece.kind == PieceKind::closed) {
                for (const auto& p : piece.points) EXPECT_FALSE(s.junction(p));
                ASSERT_TRUE(eight_connected(piece.points.back(), piece.points.front()));
            }
        }
        for (int y = 0; y < s.height_s; ++y)
            for (int x = 0; x < s.width_s; ++x) {
                const int n = uses.count({x, y}) ? uses[{x, y}] : 0;
                if (!s.edge(x, y)) {
                    ASSERT_EQ(n, 0);
                } else if (!s.junction(x, y)) {
                    ASSERT_EQ(n, 1) << x << "," << y;
                } else {
                    ASSERT_GE(n, 3);
                }
            }

        for (std::size_t id = 0; id < t.pieces.size(); ++id) {
            const auto& piece = t.pieces[id];
            const bool closed = piece.kind == PieceKind::closed;
            for (int r = 0; r < L.region_count; ++r) {
                const auto& n = t.neighbors[static_cast<std::size_t>(r)];
                const auto c = std::count(n.begin(), n.end(), static_cast<int>(id));
                ASSERT_EQ(c, !closed && piece.separates(r) ? 1 : 0);
            }
        }
    }
}

TEST(AddBorderPieces, SingleRegionGetsWholeFrame) {
    const auto L = labels_of({{0, 0, 0}, {0, 0, 0}});
    auto t = trace_pieces(extract_junctions(L), L);
    add_border_pieces(L, t);
    ASSERT_EQ(t.pieces.size(), 1u);
    EXPECT_EQ(t.pieces[0].kind, PieceKind::frame);
    EXPECT_EQ(t.neighbors[0], (std::vector<int>{0}));
    const std::vector<SubPoint> frame = {{-1, -1}, {5, -1}, {5, 3}, {-1, 3}, {-1, -1}};
    EXPECT_EQ(t.pieces[0].points, frame);
}

TEST(AddBorderPieces, OnePixelImage) {
    const auto L = labels_of({{4}});
    auto t = trace_pieces(extract_junctions(L), L);
    EXPECT_TRUE(t.pieces.empty());
    add_border_pieces(L, t);
    ASSERT_EQ(t.pieces.size(), 1u);
    EXPECT_EQ(t.pieces[0].kind, PieceKind::frame);
}

TEST(AddBorderPieces, TwoRowSplitGetsOneArcPerSide) {
    const auto L = labels_of({{1, 1}, {2, 2}});
    auto t = trace_pieces(extract_junctions(L), L);
    ASSERT_EQ(t.pieces.size(), 1u);
    add_border_pieces(L, t);
    ASSERT_EQ(t.pieces.size(), 3u);
    ASSERT_EQ(t.neighbors[0].size(), 2u);
    ASSERT_EQ(t.neighbors[1].size(), 2u);
    const auto& top = t.pieces[static_cast<std::size_t>(t.neighbors[0][1])];
    const auto& bottom = t.pieces[static_cast<std::size_t>(t.neighbors[1][1])];
    // Arcs run clockwise between the two frame hits of the traced piece.
    EXPECT_EQ(top.points, (std::vector<SubPoint>{{0, 1}, {-1, 1}, {-1, -1}, {3, -1}, {3, 1}, {2, 1}}));
    EXPECT_EQ(bottom.points, (std::vector<SubPoint>{{2, 1}, {3, 1}, {3, 3}, {-1, 3}, {-1, 1}, {0, 1}}));
}

TEST(AddBorderPieces, InteriorRegionUnchanged) {
    const auto L = five_by_five_block();
    auto t = trace_pieces(extract_junctions(L), L);
    add_border_pieces(L, t);
    EXPECT_TRUE(t.neighbors[1].empty());
    EXPECT_EQ(t.neighbors[0].size(), 1u);
}

TEST(PixelsAcross, VerticalAndHorizontalMidpoints) {
    const PixelPair v = pixels_across({3, 4});
    EXPECT_EQ((std::array<int, 4>{v.x0, v.y0, v.x1, v.y1}), (std::array<int, 4>{1, 2, 2, 2}));
    const PixelPair h = pixels_across({4, 3});
    EXPECT_EQ((std::array<int, 4>{h.x0, h.y0, h.x1, h.y1}), (std::array<int, 4>{2, 1, 2, 2}));
}
