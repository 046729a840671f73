#ifndef GROUPLAB_GROUPLAB_HPP_
#define GROUPLAB_GROUPLAB_HPP_

#include "grouplab/corpus.hpp"
#include "grouplab/element_set.hpp"
#include "grouplab/error.hpp"
#include "grouplab/families.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/group_file.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/msupp.hpp"
#include "grouplab/number_theory.hpp"
#include "grouplab/permutation.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/suite.hpp"

#endif  // GROUPLAB_GROUPLAB_HPP_
