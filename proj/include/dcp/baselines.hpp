#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dcp/detection.hpp"
#include "dcp/graph.hpp"
#include "dcp/partition.hpp"
#include "dcp/spectral.hpp"

namespace dcp {

/// k-means++ (k = 4) on raw (in-degree, out-degree) pairs.
DetectionResult detect_degree(const DirectedGraph& g, std::uint64_t seed);

enum class SapaVariant { Bibliometric = 1, DegreeDiscounted = 2 };

/// Second term of the degree-discounted similarity.
enum class SapaCoCitation {
    Direct,     // D_i^-1/2 A D_o^-1/2 A^T D_i^-1/2
    Transposed  // D_i^-1/2 A^T D_o^-1/2 A D_i^-1/2
};

struct SapaOptions {
    SapaCoCitation cocitation = SapaCoCitation::Transposed;
    int embed_dim = 4;
    double eig_tol = 1e-6;
    int eig_max_iter = 20000;
};

/// Symmetrized similarity as a linear operator X -> S X (never densified).
///   variant 1: A_I A_I^T + A_I^T A_I with A_I = A + I
///   variant 2: D_o^-1/2 A D_i^-1/2 A^T D_o^-1/2 + (co-citation term)
/// Zero-degree entries of D^-1/2 are set to 0.
std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)> sapa_operator(const DirectedGraph& g, SapaVariant variant,
                                                                     const SapaOptions& opt = {});

/// Dense similarity, symmetrized as (S + S^T) / 2 so it is bit-exactly
/// symmetric. For small graphs and tests.
Eigen::MatrixXd sapa_similarity(const DirectedGraph& g, SapaVariant variant, const SapaOptions& opt = {});

/// Top eigenvectors of the similarity, L2 row-normalized, k-means++, naming.
DetectionResult detect_sapa(const DirectedGraph& g, SapaVariant variant, std::uint64_t seed,
                            const SapaOptions& opt = {});

struct DisumEmbedding {
    int variant = 3;
    Eigen::MatrixXd points;        // variants 1-3
    Eigen::MatrixXd row_points;    // variant 4: left vectors for the 2-way row clustering
    Eigen::MatrixXd col_points;    // variant 4: right vectors for the 2-way column clustering
};

/// Regularized, degree-normalized adjacency
/// L_ij = A_ij / sqrt((k_out_i + m/n) (k_in_j + m/n)).
SparseMatrix disum_matrix(const DirectedGraph& g);

/// Singular-vector embedding: variant 1 left (n x 4), 2 right (n x 4),
/// 3 left|right (n x 8), 4 top-2 left and top-2 right kept separately.
/// Rows are L2-normalized.
DisumEmbedding disum_embed(const DirectedGraph& g, int variant, std::uint64_t seed = 0);

DetectionResult detect_disum(const DirectedGraph& g, int variant, std::uint64_t seed);

enum BowTieSet : int { CORE = 0, IN = 1, OUT = 2, TENDRIL_IN = 3, TENDRIL_OUT = 4, TUBE = 5, OTHER = 6 };
inline constexpr std::string_view kBowTieNames[7] = {"CORE", "IN", "OUT", "TENDRIL_IN", "TENDRIL_OUT", "TUBE", "OTHER"};

struct BowTiePartition {
    std::vector<int> labels;  // BowTieSet per vertex

    Partition as_partition() const { return Partition{labels, 7}; }
};

/// Strongly connected components (Tarjan, iterative). comp[v] is the
/// component id; ids are dense from 0.
std::vector<int> strongly_connected_components(const DirectedGraph& g, int* count = nullptr);

/// CORE = largest SCC (smallest minimum index on ties); IN reaches CORE; OUT
/// is reached from CORE; TUBE lies on an IN -> OUT path outside CORE;
/// TENDRIL_IN is reached from IN; TENDRIL_OUT reaches OUT; OTHER otherwise.
BowTiePartition bowtie(const DirectedGraph& g);

struct BowTieAdj {
    std::vector<Vertex> vertices;  // CORE, IN and OUT vertices in index order
    Partition partition;           // 3 labels (CORE, IN, OUT) over `vertices`
};

BowTieAdj bowtie_adj(const BowTiePartition& bp);

}  // namespace dcp
