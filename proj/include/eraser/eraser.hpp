// Umbrella header.

#ifndef ERASER_ERASER_HPP
#define ERASER_ERASER_HPP

#include "eraser/cfg.hpp"
#include "eraser/codec.hpp"
#include "eraser/eval.hpp"
#include "eraser/machine.hpp"
#include "eraser/oracle.hpp"
#include "eraser/pda.hpp"
#include "eraser/wadge.hpp"
#include "eraser/word.hpp"

#endif
