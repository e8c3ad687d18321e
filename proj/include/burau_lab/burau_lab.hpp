#ifndef BURAU_LAB_BURAU_LAB_HPP_
#define BURAU_LAB_BURAU_LAB_HPP_

#include "artin.hpp"
#include "burau.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "homology.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "proell.hpp"
#include "random.hpp"
#include "schreier.hpp"
#include "truncated.hpp"
#include "verify.hpp"
#include "word.hpp"

#endif  // BURAU_LAB_BURAU_LAB_HPP_
