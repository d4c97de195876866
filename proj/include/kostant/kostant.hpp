#pragma once

#include "kostant/algebra_spec.hpp"
#include "kostant/bases.hpp"
#include "kostant/errors.hpp"
#include "kostant/graphs.hpp"
#include "kostant/hermitian.hpp"
#include "kostant/io.hpp"
#include "kostant/kostant_system.hpp"
#include "kostant/linalg.hpp"
#include "kostant/rational.hpp"
#include "kostant/root_system.hpp"
#include "kostant/theorems.hpp"
#include "kostant/vector.hpp"
#include "kostant/weyl.hpp"
