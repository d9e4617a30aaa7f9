#pragma once

#include <pilearn/dataset.hpp>
#include <pilearn/joint_table.hpp>

#include <cstdint>
#include <vector>

namespace pilearn {

/// A conditional probability table for one variable.
/// `rows` is indexed by the parents' joint assignment (mixed radix, first
/// parent most significant); each row is a distribution over the variable.
struct BayesNode {
    std::size_t variable = 0;
    std::vector<std::size_t> parents;
    std::vector<std::vector<double>> rows;
};

/// Directed model used only to build exact joints.
struct BayesSpec {
    Domain domain;
    std::vector<BayesNode> nodes;  // exactly one per variable, any order
};

/// Multiplies the conditional tables into a joint.
/// Throws std::invalid_argument on cycles, missing or duplicate nodes,
/// wrong row counts/widths, or rows not summing to 1 within 1e-9.
JointTable multiply_out(const BayesSpec& spec);

/// Binary (d, a, b, c) model with three embedded PI submodels.
JointTable table1_model();

/// Three urn balls (white = 1), two fair lights (on = 1), a music box playing
/// on an odd number of white balls, a dog barking when the lights agree, and
/// John complaining when box and dog agree. Variable order:
/// ball1, ball2, ball3, light1, light2, music_box, dog, John.
BayesSpec music_box_spec();
JointTable music_box_model();

/// n independent draws from `joint`.
///
/// Sampling contract (stable across releases): a std::mt19937_64 seeded with
/// `seed` produces one 64-bit word per case; its top 53 bits give
/// u in [0, 1), and the case is the first assignment code whose cumulative
/// mass (summed in code order) exceeds u.
Dataset sample_joint(const JointTable& joint, std::size_t n, std::uint64_t seed);

}  // namespace pilearn
