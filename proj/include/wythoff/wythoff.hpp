#pragma once

// Umbrella header for the whole toolkit.

#include "wythoff/fibbinary.hpp"
#include "wythoff/fractal.hpp"
#include "wythoff/nat.hpp"
#include "wythoff/oeis.hpp"
#include "wythoff/render.hpp"
#include "wythoff/sequences.hpp"
#include "wythoff/tables.hpp"
#include "wythoff/verify.hpp"
#include "wythoff/wythoff_array.hpp"
#include "wythoff/zeckendorf.hpp"
