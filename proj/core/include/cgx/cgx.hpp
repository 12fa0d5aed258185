#pragma once

#include "cgx/blocks.hpp"
#include "cgx/codec.hpp"
#include "cgx/oracle.hpp"
#include "cgx/rule.hpp"
#include "cgx/sequences.hpp"
#include "cgx/types.hpp"
