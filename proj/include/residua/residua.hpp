#pragma once

#include "residua/enumerate.hpp"
#include "residua/error.hpp"
#include "residua/fixtures.hpp"
#include "residua/io.hpp"
#include "residua/poset.hpp"
#include "residua/properties.hpp"
#include "residua/residuation.hpp"
