#pragma once

// Umbrella header for the sympel library (the CLI front end lives in
// sympel/cli.hpp and is not pulled in here).

#include "sympel/conjugate.hpp"
#include "sympel/eliminate.hpp"
#include "sympel/error.hpp"
#include "sympel/field.hpp"
#include "sympel/generator.hpp"
#include "sympel/io.hpp"
#include "sympel/matrix.hpp"
#include "sympel/prng.hpp"
#include "sympel/st.hpp"
