#ifndef LIEFRAME_SPECFILE_HPP
#define LIEFRAME_SPECFILE_HPP

#include <iosfwd>
#include <string>

#include "lieframe/lie_core.hpp"

namespace lieframe {

/// Declarative text format for a group spec plus functional:
///
///   name <id>
///   n_dim <int>
///   r_dim <int>
///   h_solvable <0|1>
///   h_exponential <0|1>
///   nilpotency_step_n <int>        (optional)
///   nilpotency_step_h <int>        (optional)
///   bracket <i> <j> <k> <value>    sets c_ij^k and c_ji^k = -value (1-based)
///   c <i> <j> <k> <value>          sets exactly c_ij^k (1-based)
///   matrix <idx> <d> <d*d values>  realization of basis element idx, row-major
///   lambda <v_1> ... <v_n>
///
/// '#' starts a comment. Tokens are whitespace-separated.
struct GroupSpecFile {
  LieSplitSpec spec;
  Vec lambda;
};

GroupSpecFile load_spec_file(const std::string& path);
GroupSpecFile parse_spec_text(std::istream& in);

std::string serialize_spec(const LieSplitSpec& spec, const Vec& lambda);
void save_spec_file(const LieSplitSpec& spec, const Vec& lambda, const std::string& path);

}  // namespace lieframe

#endif
