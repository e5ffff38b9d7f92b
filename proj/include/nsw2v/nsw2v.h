/*
 * Copyright 2026 The nsw2v Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the nsw2v solver.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an nsw2v_status;
 * on failure a human-readable message is available from
 * nsw2v_last_error() until the next call on the same thread. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with nsw2v_string_free().
 */

#ifndef NSW2V_NSW2V_H_
#define NSW2V_NSW2V_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NSW2V_BUILDING_LIBRARY)
#    define NSW2V_API __declspec(dllexport)
#  else
#    define NSW2V_API __declspec(dllimport)
#  endif
#else
#  define NSW2V_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nsw2v_instance nsw2v_instance;
typedef struct nsw2v_allocation nsw2v_allocation;

typedef enum {
  NSW2V_OK = 0,
  NSW2V_ERR_INVALID_ARGUMENT = 1,
  NSW2V_ERR_PARSE = 2,
  /* s given as an integer (p/2 with p even); only half-integer s is supported. */
  NSW2V_ERR_INTEGER_S = 3,
  NSW2V_ERR_INVARIANT = 4,
  NSW2V_ERR_INVALID_ALLOCATION = 5,
  NSW2V_ERR_TOO_LARGE = 6,
  NSW2V_ERR_INTERNAL = 7
} nsw2v_status;

typedef enum {
  NSW2V_LESS = -1,
  NSW2V_EQUAL = 0,
  NSW2V_GREATER = 1
} nsw2v_order;

NSW2V_API const char* nsw2v_version(void);
NSW2V_API const char* nsw2v_last_error(void);
NSW2V_API void nsw2v_string_free(char* text);

/* Instances */

NSW2V_API nsw2v_status nsw2v_instance_parse(const char* text, size_t length,
                                            nsw2v_instance** out);
/* s_numerator is p in s = p/2; heavy_prob in [0, 1]. */
NSW2V_API nsw2v_status nsw2v_instance_generate(int agents, int goods, int s_numerator,
                                               double heavy_prob, uint64_t seed,
                                               nsw2v_instance** out);
NSW2V_API nsw2v_status nsw2v_instance_serialize(const nsw2v_instance* inst, char** out);
NSW2V_API int nsw2v_instance_agents(const nsw2v_instance* inst);
NSW2V_API int nsw2v_instance_goods(const nsw2v_instance* inst);
NSW2V_API void nsw2v_instance_free(nsw2v_instance* inst);

/* Allocations */

/* Parses the allocation file format for an instance with `goods` goods.
 * Range checks against the agent count happen in nsw2v_allocation_validate. */
NSW2V_API nsw2v_status nsw2v_allocation_parse(const char* text, size_t length, int goods,
                                              nsw2v_allocation** out);
NSW2V_API nsw2v_status nsw2v_allocation_serialize(const nsw2v_allocation* alloc, char** out);
/* Owner of `good`, or -1 when out of range. */
NSW2V_API int nsw2v_allocation_owner(const nsw2v_allocation* alloc, int good);
NSW2V_API void nsw2v_allocation_free(nsw2v_allocation* alloc);

/* NSW2V_OK if the allocation is a restricted partition of the goods,
 * NSW2V_ERR_INVALID_ALLOCATION otherwise (message names the first
 * offending good). *bad_good receives that good, or -1; may be NULL. */
NSW2V_API nsw2v_status nsw2v_allocation_validate(const nsw2v_instance* inst,
                                                 const nsw2v_allocation* alloc, int* bad_good);

/* Two lines: "profile: v1 v2 ..." (ascending, halves as decimals) and
 * "nsw: <geometric mean, 6 decimals>". The allocation must be valid. */
NSW2V_API nsw2v_status nsw2v_allocation_report(const nsw2v_instance* inst,
                                               const nsw2v_allocation* alloc, char** out);

/* Orders two valid allocations of the same instance by NSW. */
NSW2V_API nsw2v_status nsw2v_compare(const nsw2v_instance* inst, const nsw2v_allocation* a,
                                     const nsw2v_allocation* b, nsw2v_order* out);

/* Solving */

/* Computes an NSW-optimal restricted allocation. With check != 0 every
 * internal invariant is re-verified and a violation yields
 * NSW2V_ERR_INVARIANT. */
NSW2V_API nsw2v_status nsw2v_solve(const nsw2v_instance* inst, int check,
                                   nsw2v_allocation** out);

/* Exhaustive reference optimum; NSW2V_ERR_TOO_LARGE above 1e8 allocations. */
NSW2V_API nsw2v_status nsw2v_oracle(const nsw2v_instance* inst, nsw2v_allocation** out);

#ifdef __cplusplus
}
#endif

#endif /* NSW2V_NSW2V_H_ */
