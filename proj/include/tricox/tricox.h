/*
   Copyright 2026 The tricox Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to tricox.
 *
 * Every call returns one of the status codes below. Results are JSON (or
 * SVG) strings allocated by the library; release them with
 * tricox_string_free. On failure the output string, when requested,
 * holds a JSON error object of the form
 *   {"config": {...}, "status": "...", "error": "..."}
 * and tricox_last_error() returns the message for the calling thread.
 *
 * A handle may be used from one thread at a time.
 */

#ifndef TRICOX_H_
#define TRICOX_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TRICOX_API __declspec(dllexport)
#else
#define TRICOX_API __attribute__((visibility("default")))
#endif

enum {
  TRICOX_OK                 = 0,
  TRICOX_PROPERTY_FALSIFIED = 1,
  TRICOX_INVALID_INPUT      = 2,
  TRICOX_CAP_EXCEEDED       = 3,
  TRICOX_INTERNAL           = 4
};

typedef struct tricox_instance tricox_instance;

TRICOX_API char const* tricox_version(void);

/* Message of the last failed call on this thread, "" if none. */
TRICOX_API char const* tricox_last_error(void);

TRICOX_API void tricox_string_free(char* s);

/* config_json is an object with any of the keys labels, generator_order,
 * ball_radius, window, float_digits, seed; NULL or "" gives the defaults.
 * labels is "m_ab,m_bc,m_ac" with "inf" for infinity. */
TRICOX_API int tricox_instance_create(char const* config_json, tricox_instance** out);
TRICOX_API void tricox_instance_destroy(tricox_instance* inst);

/* The effective configuration. */
TRICOX_API int tricox_config(tricox_instance const* inst, char** out_json);

/* Field, Gram matrix and the classification of w. */
TRICOX_API int tricox_info(tricox_instance const* inst, char** out_json);

/* Artin words over a, b, c with capitals for inverses. */
TRICOX_API int tricox_word_problem(tricox_instance const* inst, char const* lhs, char const* rhs,
                                   char** out_json);
TRICOX_API int tricox_normal_form(tricox_instance const* inst, char const* word,
                                  char** out_json);

/* Operands are Coxeter words in a, b, c that must name members of [1,w]. */
TRICOX_API int tricox_join(tricox_instance const* inst, char const* u, char const* v,
                           char** out_json);
TRICOX_API int tricox_meet(tricox_instance const* inst, char const* u, char const* v,
                           char** out_json);

/* Reflections of the ball of the given radius, sorted along the axis. */
TRICOX_API int tricox_reflections(tricox_instance const* inst, unsigned radius, char** out_json);

/* Fiber components met by the members of the configured ball, with cells
 * in a window of the given number of periods. */
TRICOX_API int tricox_components(tricox_instance const* inst, long window, char** out_json);

/* Runs a property suite. Returns TRICOX_PROPERTY_FALSIFIED with the report
 * when an item fails. */
TRICOX_API int tricox_verify(tricox_instance const* inst, char const* suite, char** out_json);

/* model is "poincare" or "klein". out_svg receives the picture (NULL on
 * failure), out_json a summary; either may be NULL. */
TRICOX_API int tricox_render(tricox_instance const* inst, char const* model, char** out_svg,
                             char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TRICOX_H_ */
