#pragma once

#include "analog.hpp"
#include "dense.hpp"
#include "dephased.hpp"
#include "emit.hpp"
#include "grover.hpp"
#include "sweep.hpp"
#include "validate.hpp"
