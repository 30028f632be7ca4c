#pragma once

#include "liekit/scalar.hpp"
#include "liekit/matrix.hpp"
#include "liekit/exactlin.hpp"
#include "liekit/weights.hpp"
#include "liekit/liealg.hpp"
#include "liekit/repkit.hpp"
#include "liekit/decompose.hpp"
#include "liekit/serialize.hpp"
#include "liekit/verify.hpp"
