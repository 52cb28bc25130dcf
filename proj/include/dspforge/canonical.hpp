#pragma once

#include <optional>
#include <vector>

#include "dspforge/instance.hpp"

namespace dspforge {

enum class Orientation { Horizontal, Vertical };
enum class Choice { Hor, Ver };

/// Horizontal paths run c_index -> d_index along row r; vertical paths run
/// a_index -> b_index along column r. `choices` picks the branch at every
/// split grid point on the path (in path order); empty means the default
/// (Hor for horizontal, Ver for vertical).
struct CanonicalSpec {
  Orientation orientation = Orientation::Horizontal;
  int index = 1;
  int r = 1;
  std::vector<Choice> choices;

  friend bool operator==(const CanonicalSpec&, const CanonicalSpec&) = default;
};

/// An ordered vertex sequence (dense indices) for one terminal pair.
struct PathWitness {
  int pair = 0;
  std::vector<int> vertices;

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

struct Solution {
  Mode mode = Mode::Edge;
  std::vector<PathWitness> paths;  // sorted by pair index
};

int pair_index(const DspInstance& inst, Orientation o, int index);

/// Grid points (role stripped) of the row or column path, in path order.
std::vector<GridId> canonical_points(const DspInstance& inst, Orientation o, int index, int r);

/// Grid points on the path where an image may choose between Hor and Ver.
std::vector<GridId> choice_points(const DspInstance& inst, Orientation o, int index, int r);

/// Builds the (image of the) canonical path. Throws ErrorCode::OutOfRange for
/// bad indices and ErrorCode::Parameter when the choice list has the wrong length.
PathWitness canonical_path(const DspInstance& inst, const CanonicalSpec& spec);
PathWitness horizontal_canonical(const DspInstance& inst, int j, int r);
PathWitness vertical_canonical(const DspInstance& inst, int i, int r);

/// Every image of the row/column-r path that is a valid path in the instance.
std::vector<PathWitness> canonical_images(const DspInstance& inst, Orientation o, int index, int r);

/// True iff consecutive vertices are adjacent (respecting direction) and no vertex repeats.
bool is_valid_walk(const DspInstance& inst, const std::vector<int>& vertices);

/// Decodes an image back to its spec, or std::nullopt if `w` is not an image.
/// Throws ErrorCode::Parameter if `w` is not a valid path of its pair.
std::optional<CanonicalSpec> is_image_of_canonical(const DspInstance& inst, const PathWitness& w);

/// Vertical path gamma_i for (a_i, b_i) and horizontal path gamma_j for (c_j, d_j).
/// Throws ErrorCode::NotClique or ErrorCode::Variant.
Solution completeness_witness(const DspInstance& inst, const std::vector<int>& labels);

}  // namespace dspforge
