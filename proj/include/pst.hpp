#ifndef PST_HPP
#define PST_HPP

#include "pst/analysis.hpp"
#include "pst/corpus.hpp"
#include "pst/element_set.hpp"
#include "pst/errors.hpp"
#include "pst/families.hpp"
#include "pst/group.hpp"
#include "pst/group_file.hpp"
#include "pst/lattice.hpp"
#include "pst/perm.hpp"
#include "pst/permutability.hpp"
#include "pst/primes.hpp"
#include "pst/report.hpp"
#include "pst/structure.hpp"
#include "pst/theorems.hpp"

#endif // PST_HPP
