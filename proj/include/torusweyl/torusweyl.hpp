#ifndef TORUSWEYL_TORUSWEYL_HPP
#define TORUSWEYL_TORUSWEYL_HPP

// Weyl quantization, dequantization, Moyal calculus and discrete Wigner
// transforms for the torus phase space with Hilbert space C^N.

#include "torusweyl/core.hpp"
#include "torusweyl/representation.hpp"
#include "torusweyl/symbols.hpp"
#include "torusweyl/quantize.hpp"
#include "torusweyl/wigner.hpp"
#include "torusweyl/dequantize.hpp"
#include "torusweyl/moyal.hpp"

#endif  // TORUSWEYL_TORUSWEYL_HPP
