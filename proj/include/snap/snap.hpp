#pragma once

#include "snap/corpus.hpp"
#include "snap/error.hpp"
#include "snap/filter.hpp"
#include "snap/matcher.hpp"
#include "snap/miner.hpp"
#include "snap/payload.hpp"
#include "snap/recommender.hpp"
#include "snap/tokenizer.hpp"
