#pragma once

#include "idemlab/constructors.hpp"
#include "idemlab/error.hpp"
#include "idemlab/harness.hpp"
#include "idemlab/ideal.hpp"
#include "idemlab/idempotents.hpp"
#include "idemlab/io.hpp"
#include "idemlab/modules.hpp"
#include "idemlab/ring.hpp"
#include "idemlab/subquotient.hpp"
#include "idemlab/toeplitz.hpp"
