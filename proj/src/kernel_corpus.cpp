#include "cuboid/kernel_corpus.hpp"

namespace cuboid {

// The 14 kernel-basis definitions, embedded verbatim as shipped in
// data/kernel_basis.poly. kKernelCorpusChecksum guards both copies
// against accidental edits.
const char* const kKernelCorpus = R"RAW(~q1:=-3*E02*E21+E01^2*E21-9*E03*E20+4*E01*E02*E20
-E01^3*E20+3*E11*E12
-2*E01*E10*E12-E01*E11^2+E01^2*E10*E11+3*E03*E10^2-E01*E02*E10^2;
~q2:=9*E02*E30-3*E01^2*E30-3*E11*E21+2*E01*E10*E21+3*E12*E20-4*E02
*E10*E20+E01^2*E10*E20-E10^2*E12+E10*E11^2-E01*E10^2*E11+E02*E10^3;
~q3:=-9*E02^2*E30+6*E01^2*E02*E30-E01^4*E30-3*E02*E12*E20+E01^2*E12
*E20-9*E03*E11*E20+4*E01*E02*E11*E20-E01^3*E11*E20+6*E01*E03*E10*E20
+4*E02^2*E10*E20-5*E01^2*E02*E10*E20+E01^4*E10*E20+3*E11^2*E12
-4*E01
*E10*E11*E12+E02*E10^2*E12+E01^2*E10^2*E12-E01*E11^3
-E02*E10*E11^2
+2*E01^2*E10*E11^2+3*E03*E10^2*E11-E01^3*E10^2*E11
-2*E01*E03*E10^3
-E02^2*E10^3+E01^2*E02*E10^3;
~q4:=-27*E03*E21+E01^3*E21-18*E01*E03*E20+12*E02^2*E20
+E01^2*E02*E20
-E01^4*E20+9*E12^2+3*E01*E11*E12-6*E02*E10*E12-2*E01^2*E10*E12
-3*E02
*E11^2-E01^2*E11^2+9*E03*E10*E11+3*E01*E02*E10*E11
+E01^3*E10*E11+3
*E01*E03*E10^2-3*E02^2*E10^2-E01^2*E02*E10^2;
~q5:=-81*E03*E30+18*E01*E02*E30-3*E01^3*E30+9*E12*E21
-E01^2*E10*E21
-6*E01*E12*E20+12*E02*E11*E20-3*E01^2*E11*E20+36*E03*E10*E20-16*E01
*E02*E10*E20+4*E01^3*E10*E20-6*E10*E11*E12+5*E01*E10^2*E12-3*E11^3
+7*E01*E10*E11^2-3*E02*E10^2*E11-4*E01^2*E10^2*E11
-9*E03*E10^3+4
*E01*E02*E10^3;
~q6:=-9*E12*E30+3*E01*E11*E30-3*E02*E10*E30+3*E21^2-2*E01*E20*E21+4
*E02*E20^2-E01^2*E20^2+E10*E12*E20-E11^2*E20+E01*E10*E11*E20
-E02
*E10^2*E20;
~q7:=-27*E02*E03*E30+9*E01^2*E03*E30+3*E01*E02^2*E30-E01^
3*E02*E30-9
*E03*E12*E20+E01*E02*E12*E20-3*E01*E03*E11*E20+4*E02^2*E11*E20-E01^2
*E02*E11*E20+12*E02*E03*E10*E20-E01^2*E03*E10*E20-4*E01*E02^2*E10
*E20+E01^3*E02*E10*E20+3*E11*E12^2-2*E01*E10*E12^2-2*E02*E10*E11*E12
+3*E03*E10^2*E12+E01*E02*E10^2*E12-E02*E11^3+2*E01*E02*E10*E11^2+E01
*E03*E10^2*E11-E02^2*E10^2*E11-E01^2*E02*E10^2*E11-3*E02*E03*E10^3
+E01*E02^2*E10^3;
~q8:=27*E02*E12*E30-9*E01^2*E12*E30-81*E03*E11*E30+18*E01*E02*E11*E30
-3*E01^3*E11*E30+54*E01*E03*E10*E30-9*E02^2*E10*E30-9*E01^2*E02*E10
*E30+2*E01^4*E10*E30+9*E12^2*E20-6*E01*E11*E12*E20-15*E02*E10*E12
*E20+7*E01^2*E10*E12*E20+12*E02*E11^2*E20-3*E01^2*E11^2*E20+27*E03
*E10*E11*E20-20*E01*E02*E10*E11*E20+5*E01^3*E10*E11*E20-18*E01*E03
*E10^2*E20+4*E02^2*E10^2*E20+7*E01^2*E02*E10^2*E20
-2*E01^4*E10^2*E20
-3*E10^2*E12^2+2*E01*E10^2*E11*E12+4*E02*E10^3*E12
-2*E01^2*E10^3*E12
-3*E11^4+8*E01*E10*E11^3-4*E02*E10^2*E11^2-7*E01^2*E10^2*E11^2
-6*E03
*E10^3*E11+6*E01*E02*E10^3*E11+2*E01^3*E10^3*E11+4*E01*E03*E10^4
-E02^2*E10^4-2*E01^2*E02*E10^4;
~q9:=-27*E03^2*E20+18*E01*E02*E03*E20-4*E01^3*E03*E20-4*E02^3*E20
+E01^2*E02^2*E20-3*E02*E12^2+E01^2*E12^2+9*E03*E11*E12-E01*E02*E11
*E12-6*E01*E03*E10*E12+2*E02^2*E10*E12-3*E01*E03*E11^2+E02^2*E11^2
-3*E02*E03*E10*E11+4*E01^2*E03*E10*E11-E01*E02^2*E10*E11+9*E03^2
*E10^2-4*E01*E02*E03*E10^2+E02^3*E10^2;
~q10:=-243*E02*E03*E20*E30+81*E01^2*E03*E20*E30+81*E01*E02^2*E20*E30
-45*E01^3*E02*E20*E30+6*E01^5*E20*E30-81*E02*E11*E12*E30+27*E01^2
*E11*E12*E30+54*E01*E02*E10*E12*E30-18*E01^3*E10*E12*E30+243*E03
*E11^2*E30-54*E01*E02*E11^2*E30+9*E01^3*E11^2*E30-324*E01*E03*E10
*E11*E30+27*E02^2*E10*E11*E30+63*E01^2*E02*E10*E11*E30-12*E01^4*E10
*E11*E30+81*E02*E03*E10^2*E30+81*E01^2*E03*E10^2*E30-45*E01*E02^2
*E10^2*E30-3*E01^3*E02*E10^2*E30+2*E01^5*E10^2*E30-81*E03*E12*E20^2
+27*E01*E02*E12*E20^2-6*E01^3*E12*E20^2+27*E01*E03*E11*E20^2+36
*E02^2*E11*E20^2-33*E01^2*E02*E11*E20^2+6*E01^4*E11*E20^2+108*E02
*E03*E10*E20^2-45*E01^2*E03*E10*E20^2-60*E01*E02^2*E10*E20^2+39
*E01^3*E02*E10*E20^2-6*E01^5*E10*E20^2+27*E02*E10*E11*E12*E20-9
*E01^2*E10*E11*E12*E20+54*E03*E10^2*E12*E20-36*E01*E02*E10^2*E12*E20
+10*E01^3*E10^2*E12*E20-45*E02*E11^3*E20+15*E01^2*E11^3*E20-81*E03
*E10*E11^2*E20+108*E01*E02*E10*E11^2*E20-33*E01^3*E10*E11^2*E20+90
*E01*E03*E10^2*E11*E20-33*E02^2*E10^2*E11*E20-59*E01^2*E02*E10^2*E11
*E20+20*E01^4*E10^2*E11*E20-63*E02*E03*E10^3*E20-9*E01^2*E03*E10^3
*E20+43*E01*E02^2*E10^3*E20-5*E01^3*E02*E10^3*E20-2*E01^5*E10^3*E20
-6*E02*E10^3*E11*E12+2*E01^2*E10^3*E11*E12-9*E03*E10^4*E12+7*E01*E02
*E10^4*E12-2*E01^3*E10^4*E12+9*E11^5-30*E01*E10*E11^4+15*E02*E10^2
*E11^3+35*E01^2*E10^2*E11^3+18*E03*E10^3*E11^2-34*E01*E02*E10^3
*E11^2-16*E01^3*E10^3*E11^2-21*E01*E03*E10^4*E11+6*E02^2*E10^4*E11
+21*E01^2*E02*E10^4*E11+2*E01^4*E10^4*E11+9*E02*E03*E10^5+4*E01^2
*E03*E10^5-7*E01*E02^2*E10^5-2*E01^3*E02*E10^5;
~q11:=81*E02^2*E12*E30-54*E01^2*E02*E12*E30+9*E01^4*E12*E30-243*E02
*E03*E11*E30+81*E01^2*E03*E11*E30+54*E01*E02^2*E11*E30-27*E01^3*E02
*E11*E30+3*E01^5*E11*E30+162*E01*E02*E03*E10*E30-54*E01^3*E03*E10
*E30-27*E02^3*E10*E30-18*E01^2*E02^2*E10*E30+15*E01^4*E02*E10*E30-2
*E01^6*E10*E30-243*E03^2*E20^2+162*E01*E02*E03*E20^2-36*E01^3*E03
*E20^2-36*E02^3*E20^2+9*E01^2*E02^2*E20^2+81*E03*E11*E12*E20-27*E01
*E02*E11*E12*E20+6*E01^3*E11*E12*E20-54*E01*E03*E10*E12*E20-27*E02^2
*E10*E12*E20+36*E01^2*E02*E10*E12*E20-7*E01^4*E10*E12*E20-27*E01*E03
*E11^2*E20+45*E02^2*E11^2*E20-21*E01^2*E02*E11^2*E20+3*E01^4*E11^2
*E20+54*E02*E03*E10*E11*E20+9*E01^2*E03*E10*E11*E20-69*E01*E02^2*E10
*E11*E20+35*E01^3*E02*E10*E11*E20-5*E01^5*E10*E11*E20+162*E03^2
*E10^2*E20-144*E01*E02*E03*E10^2*E20+30*E01^3*E03*E10^2*E20+33*E02^3
*E10^2*E20+14*E01^2*E02^2*E10^2*E20-13*E01^4*E02*E10^2*E20+2*E01^6
*E10^2*E20-27*E03*E10^2*E11*E12+9*E01*E02*E10^2*E11*E12-2*E01^3
*E10^2*E11*E12+18*E01*E03*E10^3*E12+6*E02^2*E10^3*E12-10*E01^2*E02
*E10^3*E12+2*E01^4*E10^3*E12-9*E02*E11^4+3*E01^2*E11^4+24*E01*E02
*E10*E11^3-8*E01^3*E10*E11^3+9*E01*E03*E10^2*E11^2-15*E02^2*E10^2
*E11^2-17*E01^2*E02*E10^2*E11^2+7*E01^4*E10^2*E11^2-9*E02*E03*E10^3
*E11-6*E01^2*E03*E10^3*E11+21*E01*E02^2*E10^3*E11-2*E01^5*E10^3*E11
-27*E03^2*E10^4+24*E01*E02*E03*E10^4-4*E01^3*E03*E10^4-6*E02^3*E10^4
-5*E01^2*E02^2*E10^4+2*E01^4*E02*E10^4;
~q12:=
-27*E02^3*E30^2+27*E01^2*E02^2*E30^2-9*E01^4*E02*E30^2+E01^6
*E30^2-81*E02*E03*E11*E20*E30+27*E01^2*E03*E11*E20*E30+27*E01*E02^2
*E11*E20*E30-15*E01^3*E02*E11*E20*E30+2*E01^5*E11*E20*E30+54*E01*E02
*E03*E10*E20*E30-18*E01^3*E03*E10*E20*E30+18*E02^3*E10*E20*E30-36
*E01^2*E02^2*E10*E20*E30+16*E01^4*E02*E10*E20*E30-2*E01^6*E10*E20
*E30+27*E03*E11^3*E30-9*E01*E02*E11^3*E30+2*E01^3*E11^3*E30-54*E01
*E03*E10*E11^2*E30+18*E01^2*E02*E10*E11^2*E30-4*E01^4*E10*E11^2*E30
+27*E02*E03*E10^2*E11*E30+27*E01^2*E03*E10^2*E11*E30-9*E01*E02^2
*E10^2*E11*E30-7*E01^3*E02*E10^2*E11*E30+2*E01^5*E10^2*E11*E30-18
*E01*E02*E03*E10^3*E30-2*E01^3*E03*E10^3*E30-4*E02^3*E10^3*E30+10
*E01^2*E02^2*E10^3*E30-2*E01^4*E02*E10^3*E30-27*E03^2*E20^3+18*E01
*E02*E03*E20^3-4*E01^3*E03*E20^3-4*E02^3*E20^3+E01^2*E02^2*E20^3+9
*E02^2*E11^2*E20^2-6*E01^2*E02*E11^2*E20^2+E01^4*E11^2*E20^2+27*E02
*E03*E10*E11*E20^2-9*E01^2*E03*E10*E11*E20^2-21*E01*E02^2*E10*E11
*E20^2+13*E01^3*E02*E10*E11*E20^2-2*E01^5*E10*E11*E20^2+27*E03^2
*E10^2*E20^2-36*E01*E02*E03*E10^2*E20^2+10*E01^3*E03*E10^2*E20^2
+E02^3*E10^2*E20^2+12*E01^2*E02^2*E10^2*E20^2-7*E01^4*E02*E10^2
*E20^2+E01^6*E10^2*E20^2-6*E02*E11^4*E20+2*E01^2*E11^4*E20-9*E03*E10
*E11^3*E20+19*E01*E02*E10*E11^3*E20-6*E01^3*E10*E11^3*E20+18*E01*E03
*E10^2*E11^2*E20-6*E02^2*E10^2*E11^2*E20-18*E01^2*E02*E10^2*E11^2
*E20+6*E01^4*E10^2*E11^2*E20-15*E02*E03*E10^3*E11*E20-7*E01^2*E03
*E10^3*E11*E20+13*E01*E02^2*E10^3*E11*E20+3*E01^3*E02*E10^3*E11*E20
-2*E01^5*E10^3*E11*E20-9*E03^2*E10^4*E20+16*E01*E02*E03*E10^4*E20-2
*E01^3*E03*E10^4*E20-7*E01^2*E02^2*E10^4*E20+2*E01^4*E02*E10^4*E20
+E11^6-4*E01*E10*E11^5+2*E02*E10^2*E11^4+6*E01^2*E10^2*E11^4+2*E03
*E10^3*E11^3-6*E01*E02*E10^3*E11^3-4*E01^3*E10^3*E11^3-4*E01*E03
*E10^4*E11^2+E02^2*E10^4*E11^2+6*E01^2*E02*E10^4*E11^2+E01^4*E10^4
*E11^2+2*E02*E03*E10^5*E11+2*E01^2*E03*E10^5*E11-2*E01*E02^2*E10^5
*E11-2*E01^3*E02*E10^5*E11+E03^2*E10^6-2*E01*E02*E03*E10^6+E01^2
*E02^2*E10^6;
~q13:=
-729*E02^3*E12*E30^2+729*E01^2*E02^2*E12*E30^2-243*E01^4*E02
*E12*E30^2+27*E01^6*E12*E30^2+2187*E02^2*E03*E11*E30^2-1458*E01^2
*E02*E03*E11*E30^2+243*E01^4*E03*E11*E30^2-486*E01*E02^3*E11*E30^2
+405*E01^3*E02^2*E11*E30^2-108*E01^5*E02*E11*E30^2+9*E01^7*E11*E30^2
-1458*E01*E02^2*E03*E10*E30^2+972*E01^3*E02*E03*E10*E30^2-162*E01^5
*E03*E10*E30^2+243*E02^4*E10*E30^2+81*E01^2*E02^3*E10*E30^2-189
*E01^4*E02^2*E10*E30^2+63*E01^6*E02*E10*E30^2-6*E01^8*E10*E30^2+4374
*E02*E03^2*E20^2*E30-1458*E01^2*E03^2*E20^2*E30-2916*E01*E02^2*E03
*E20^2*E30+1620*E01^3*E02*E03*E20^2*E30-216*E01^5*E03*E20^2*E30+324
*E02^4*E20^2*E30+54*E01^2*E02^3*E20^2*E30-162*E01^4*E02^2*E20^2*E30
+48*E01^6*E02*E20^2*E30-4*E01^8*E20^2*E30+486*E02^3*E10*E12*E20*E30
-486*E01^2*E02^2*E10*E12*E20*E30+162*E01^4*E02*E10*E12*E20*E30-18
*E01^6*E10*E12*E20*E30-2187*E03^2*E11^2*E20*E30+1458*E01*E02*E03
*E11^2*E20*E30-324*E01^3*E03*E11^2*E20*E30-405*E02^3*E11^2*E20*E30
+162*E01^2*E02^2*E11^2*E20*E30-27*E01^4*E02*E11^2*E20*E30+3*E01^6
*E11^2*E20*E30+2916*E01*E03^2*E10*E11*E20*E30-1458*E02^2*E03*E10*E11
*E20*E30-972*E01^2*E02*E03*E10*E11*E20*E30+270*E01^4*E03*E10*E11*E20
*E30+864*E01*E02^3*E10*E11*E20*E30-486*E01^3*E02^2*E10*E11*E20*E30
+108*E01^5*E02*E10*E11*E20*E30-10*E01^7*E10*E11*E20*E30-2916*E02
*E03^2*E10^2*E20*E30+2916*E01*E02^2*E03*E10^2*E20*E30-1080*E01^3*E02
*E03*E10^2*E20*E30+108*E01^5*E03*E10^2*E20*E30-378*E02^4*E10^2*E20
*E30-270*E01^2*E02^3*E10^2*E20*E30+306*E01^4*E02^2*E10^2*E20*E30-86
*E01^6*E02*E10^2*E20*E30+8*E01^8*E10^2*E20*E30-108*E02^3*E10^3*E12
*E30+108*E01^2*E02^2*E10^3*E12*E30-36*E01^4*E02*E10^3*E12*E30+4
*E01^6*E10^3*E12*E30+81*E02^2*E11^4*E30-54*E01^2*E02*E11^4*E30+9
*E01^4*E11^4*E30-216*E01*E02^2*E10*E11^3*E30+144*E01^3*E02*E10*E11^3
*E30-24*E01^5*E10*E11^3*E30+729*E03^2*E10^2*E11^2*E30-486*E01*E02
*E03*E10^2*E11^2*E30+108*E01^3*E03*E10^2*E11^2*E30+135*E02^3*E10^2
*E11^2*E30+162*E01^2*E02^2*E10^2*E11^2*E30-135*E01^4*E02*E10^2*E11^2
*E30+23*E01^6*E10^2*E11^2*E30-972*E01*E03^2*E10^3*E11*E30+324*E02^2
*E03*E10^3*E11*E30+432*E01^2*E02*E03*E10^3*E11*E30-108*E01^4*E03
*E10^3*E11*E30-252*E01*E02^3*E10^3*E11*E30+36*E01^3*E02^2*E10^3*E11
*E30+36*E01^5*E02*E10^3*E11*E30-8*E01^7*E10^3*E11*E30+486*E02*E03^2
*E10^4*E30+162*E01^2*E03^2*E10^4*E30-540*E01*E02^2*E03*E10^4*E30+108
*E01^3*E02*E03*E10^4*E30+72*E02^4*E10^4*E30+78*E01^2*E02^3*E10^4*E30
-54*E01^4*E02^2*E10^4*E30+8*E01^6*E02*E10^4*E30+729*E03^2*E12*E20^3
-486*E01*E02*E03*E12*E20^3+108*E01^3*E03*E12*E20^3+81*E01^2*E02^2
*E12*E20^3-36*E01^4*E02*E12*E20^3+4*E01^6*E12*E20^3-243*E01*E03^2
*E11*E20^3-324*E02^2*E03*E11*E20^3+378*E01^2*E02*E03*E11*E20^3-72
*E01^4*E03*E11*E20^3+108*E01*E02^3*E11*E20^3-123*E01^3*E02^2*E11
*E20^3+40*E01^5*E02*E11*E20^3-4*E01^7*E11*E20^3-1701*E02*E03^2*E10
*E20^3+648*E01^2*E03^2*E10*E20^3+1350*E01*E02^2*E03*E10*E20^3-828
*E01^3*E02*E03*E10*E20^3+120*E01^5*E03*E10*E20^3-108*E02^4*E10*E20^3
-117*E01^2*E02^3*E10*E20^3+148*E01^4*E02^2*E10*E20^3-44*E01^6*E02
*E10*E20^3+4*E01^8*E10*E20^3-729*E03^2*E10^2*E12*E20^2+486*E01*E02
*E03*E10^2*E12*E20^2-108*E01^3*E03*E10^2*E12*E20^2-81*E02^3*E10^2
*E12*E20^2+9*E01^4*E02*E10^2*E12*E20^2-E01^6*E10^2*E12*E20^2+405*E02
*E03*E11^3*E20^2-135*E01^2*E03*E11^3*E20^2-135*E01*E02^2*E11^3*E20^2
+75*E01^3*E02*E11^3*E20^2-10*E01^5*E11^3*E20^2+729*E03^2*E10*E11^2
*E20^2-1296*E01*E02*E03*E10*E11^2*E20^2+378*E01^3*E03*E10*E11^2
*E20^2+135*E02^3*E10*E11^2*E20^2+216*E01^2*E02^2*E10*E11^2*E20^2-141
*E01^4*E02*E10*E11^2*E20^2+19*E01^6*E10*E11^2*E20^2-729*E01*E03^2
*E10^2*E11*E20^2+567*E02^2*E03*E10^2*E11*E20^2+648*E01^2*E02*E03
*E10^2*E11*E20^2-225*E01^4*E03*E10^2*E11*E20^2-342*E01*E02^3*E10^2
*E11*E20^2+60*E01^3*E02^2*E10^2*E11*E20^2+36*E01^5*E02*E10^2*E11
*E20^2-7*E01^7*E10^2*E11*E20^2+1539*E02*E03^2*E10^3*E20^2-270*E01^2
*E03^2*E10^3*E20^2-1404*E01*E02^2*E03*E10^3*E20^2+540*E01^3*E02*E03
*E10^3*E20^2-42*E01^5*E03*E10^3*E20^2+123*E02^4*E10^3*E20^2+184
*E01^2*E02^3*E10^3*E20^2-147*E01^4*E02^2*E10^3*E20^2+31*E01^6*E02
*E10^3*E20^2-2*E01^8*E10^3*E20^2+243*E03^2*E10^4*E12*E20-162*E01*E02
*E03*E10^4*E12*E20+36*E01^3*E03*E10^4*E12*E20+36*E02^3*E10^4*E12*E20
-9*E01^2*E02^2*E10^4*E12*E20-81*E03*E11^5*E20+27*E01*E02*E11^5*E20-6
*E01^3*E11^5*E20+270*E01*E03*E10*E11^4*E20-27*E02^2*E10*E11^4*E20-72
*E01^2*E02*E10*E11^4*E20+17*E01^4*E10*E11^4*E20-270*E02*E03*E10^2
*E11^3*E20-270*E01^2*E03*E10^2*E11^3*E20+162*E01*E02^2*E10^2*E11^3
*E20+22*E01^3*E02*E10^2*E11^3*E20-12*E01^5*E10^2*E11^3*E20-405*E03^2
*E10^3*E11^2*E20+810*E01*E02*E03*E10^3*E11^2*E20-75*E02^3*E10^3
*E11^2*E20-222*E01^2*E02^2*E10^3*E11^2*E20+63*E01^4*E02*E10^3*E11^2
*E20-3*E01^6*E10^3*E11^2*E20+459*E01*E03^2*E10^4*E11*E20-216*E02^2
*E03*E10^4*E11*E20-522*E01^2*E02*E03*E10^4*E11*E20+84*E01^4*E03
*E10^4*E11*E20+160*E01*E02^3*E10^4*E11*E20+51*E01^3*E02^2*E10^4*E11
*E20-36*E01^5*E02*E10^4*E11*E20+4*E01^7*E10^4*E11*E20-459*E02*E03^2
*E10^5*E20+450*E01*E02^2*E03*E10^5*E20-84*E01^3*E02*E03*E10^5*E20-40
*E02^4*E10^5*E20-75*E01^2*E02^3*E10^5*E20+36*E01^4*E02^2*E10^5*E20-4
*E01^6*E02*E10^5*E20-27*E03^2*E10^6*E12+18*E01*E02*E03*E10^6*E12-4
*E01^3*E03*E10^6*E12-4*E02^3*E10^6*E12+E01^2*E02^2*E10^6*E12+27*E03
*E10^2*E11^5-9*E01*E02*E10^2*E11^5+2*E01^3*E10^2*E11^5-90*E01*E03
*E10^3*E11^4+6*E02^2*E10^3*E11^4+26*E01^2*E02*E10^3*E11^4-6*E01^4
*E10^3*E11^4+45*E02*E03*E10^4*E11^3+105*E01^2*E03*E10^4*E11^3-31*E01
*E02^2*E10^4*E11^3-21*E01^3*E02*E10^4*E11^3+6*E01^5*E10^4*E11^3+54
*E03^2*E10^5*E11^2-126*E01*E02*E03*E10^5*E11^2-42*E01^3*E03*E10^5
*E11^2+10*E02^3*E10^5*E11^2+42*E01^2*E02^2*E10^5*E11^2-2*E01^6*E10^5
*E11^2-63*E01*E03^2*E10^6*E11+24*E02^2*E03*E10^6*E11+86*E01^2*E02
*E03*E10^6*E11-20*E01*E02^3*E10^6*E11-15*E01^3*E02^2*E10^6*E11+4
*E01^5*E02*E10^6*E11+45*E02*E03^2*E10^7+6*E01^2*E03^2*E10^7-46*E01
*E02^2*E03*E10^7+4*E02^4*E10^7+9*E01^2*E02^3*E10^7-2*E01^4*E02^2
*E10^7;
~q14:=
81*E03^2*E30-27*E01*E02*E03*E30+3*E01^3*E03*E30+3*E02^3*E30+9
*E01*E03*E12*E20-3*E02^2*E12*E20-9*E02*E03*E11*E20+3*E01^2*E03*E11
*E20-54*E03^2*E10*E20+30*E01*E02*E03*E10*E20-7*E01^3*E03*E10*E20-4
*E02^3*E10*E20+E01^2*E02^2*E10*E20-3*E12^3+E01^2*E10*E12^2+9*E03*E10
*E11*E12-E01*E02*E10*E11*E12-9*E01*E03*E10^2*E12+2*E02^2*E10^2*E12+3
*E03*E11^3-9*E01*E03*E10*E11^2+E02^2*E10*E11^2+7*E01^2*E03*E10^2*E11
-E01*E02^2*E10^2*E11+15*E03^2*E10^3-7*E01*E02*E03*E10^3+E02^3*E10^3;
)RAW";

const std::uint64_t kKernelCorpusChecksum = 0x1a2713680eb6ecf2ULL;

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace cuboid
