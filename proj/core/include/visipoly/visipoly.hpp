#ifndef VISIPOLY_VISIPOLY_HPP
#define VISIPOLY_VISIPOLY_HPP

#include "visipoly/batch.hpp"
#include "visipoly/class_spec.hpp"
#include "visipoly/closed_forms.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/graph.hpp"
#include "visipoly/graph_io.hpp"
#include "visipoly/mutual_visibility.hpp"
#include "visipoly/polynomial.hpp"
#include "visipoly/verify.hpp"
#include "visipoly/vis_poly.hpp"

#endif
