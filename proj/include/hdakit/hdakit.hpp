#ifndef HDAKIT_HDAKIT_HPP
#define HDAKIT_HDAKIT_HPP

#include "hdakit/algebra.hpp"
#include "hdakit/error.hpp"
#include "hdakit/hda.hpp"
#include "hdakit/homology.hpp"
#include "hdakit/languages.hpp"
#include "hdakit/precubical.hpp"
#include "hdakit/reduce.hpp"
#include "hdakit/trace.hpp"

#endif  // HDAKIT_HDAKIT_HPP
