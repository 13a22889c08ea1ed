/**
 * Copyright 2026 The SPIN Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "spin/error.hpp"
#include "spin/raster.hpp"
#include "spin/image_io.hpp"
#include "spin/geometry.hpp"
#include "spin/rng.hpp"
#include "spin/augment.hpp"
#include "spin/time.hpp"
#include "spin/solar.hpp"
#include "spin/metrics.hpp"
#include "spin/cloudindex.hpp"
#include "spin/synth.hpp"
#include "spin/dataset.hpp"
#include "spin/report.hpp"
#include "spin/parallel.hpp"
#include "spin/config.hpp"
#include "spin/commands.hpp"
