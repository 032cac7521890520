#ifndef CUBICOUNT_CUBICOUNT_HPP
#define CUBICOUNT_CUBICOUNT_HPP

#include "cubicount/bigint.hpp"
#include "cubicount/common.hpp"
#include "cubicount/corpus.hpp"
#include "cubicount/counting.hpp"
#include "cubicount/curves.hpp"
#include "cubicount/field.hpp"
#include "cubicount/formulas.hpp"
#include "cubicount/poly.hpp"
#include "cubicount/ratexpr.hpp"
#include "cubicount/tsr.hpp"

#endif
