// Generated by tools/expand_tables.py from the factored coefficient
// polynomials. Do not edit; regenerate and keep data/coefficients.txt in sync.
#pragma once

namespace bures::detail {

inline constexpr const char* kCoefficientText = R"COEFF(# table coeff m_pow a_pow value
IA a0 1 3 -72
IA a0 1 4 -576
IA a0 1 5 -1872
IA a0 1 6 -3168
IA a0 1 7 -2880
IA a0 1 8 -1152
IA a0 2 2 -108
IA a0 2 3 -1404
IA a0 2 4 -6408
IA a0 2 5 -14112
IA a0 2 6 -15840
IA a0 2 7 -7488
IA a0 3 1 -36
IA a0 3 2 -1098
IA a0 3 3 -7992
IA a0 3 4 -24408
IA a0 3 5 -35136
IA a0 3 6 -20160
IA a0 4 1 -270
IA a0 4 2 -4284
IA a0 4 3 -20484
IA a0 4 4 -40320
IA a0 4 5 -29232
IA a0 5 1 -828
IA a0 5 2 -8334
IA a0 5 3 -25272
IA a0 5 4 -24696
IA a0 6 1 -1314
IA a0 6 2 -8208
IA a0 6 3 -12168
IA a0 7 1 -1080
IA a0 7 2 -3240
IA a0 8 1 -360
IA a1 1 3 28
IA a1 1 4 120
IA a1 1 6 -640
IA a1 1 7 -960
IA a1 1 8 -384
IA a1 2 2 42
IA a1 2 3 -114
IA a1 2 4 -3000
IA a1 2 5 -12168
IA a1 2 6 -17664
IA a1 2 7 -8640
IA a1 3 1 14
IA a1 3 2 -381
IA a1 3 3 -7240
IA a1 3 4 -35708
IA a1 3 5 -63456
IA a1 3 6 -37760
IA a1 4 1 -147
IA a1 4 2 -5610
IA a1 4 3 -41350
IA a1 4 4 -98376
IA a1 4 5 -74040
IA a1 5 1 -1370
IA a1 5 2 -21111
IA a1 5 3 -76704
IA a1 5 4 -77956
IA a1 6 1 -3941
IA a1 6 2 -29544
IA a1 6 3 -45692
IA a1 7 1 -4464
IA a1 7 2 -14028
IA a1 8 1 -1756
IA a2 1 2 -144
IA a2 1 3 -1152
IA a2 1 4 -3744
IA a2 1 5 -6336
IA a2 1 6 -5760
IA a2 1 7 -2304
IA a2 2 1 -252
IA a2 2 2 -3096
IA a2 2 3 -13752
IA a2 2 4 -29808
IA a2 2 5 -33120
IA a2 2 6 -15552
IA a2 3 0 -108
IA a2 3 1 -2754
IA a2 3 2 -18720
IA a2 3 3 -55080
IA a2 3 4 -77472
IA a2 3 5 -43776
IA a2 4 0 -810
IA a2 4 1 -11196
IA a2 4 2 -50040
IA a2 4 3 -94608
IA a2 4 4 -66816
IA a2 5 0 -2484
IA a2 5 1 -22374
IA a2 5 2 -63720
IA a2 5 3 -59832
IA a2 6 0 -3942
IA a2 6 1 -22464
IA a2 6 2 -31464
IA a2 7 0 -3240
IA a2 7 1 -9000
IA a2 8 0 -1080
IA a3 0 4 -24
IA a3 0 5 -72
IA a3 0 6 96
IA a3 0 7 384
IA a3 0 9 -384
IA a3 1 3 -36
IA a3 1 4 -612
IA a3 1 5 -2880
IA a3 1 6 -7200
IA a3 1 7 -10944
IA a3 1 8 -7488
IA a3 2 1 144
IA a3 2 2 1140
IA a3 2 3 2952
IA a3 2 4 -960
IA a3 2 5 -20544
IA a3 2 6 -43200
IA a3 2 7 -31872
IA a3 3 0 72
IA a3 3 1 1656
IA a3 3 2 8820
IA a3 3 3 16164
IA a3 3 4 -6888
IA a3 3 5 -61776
IA a3 3 6 -61728
IA a3 4 0 540
IA a3 4 1 6912
IA a3 4 2 25524
IA a3 4 3 26928
IA a3 4 4 -32112
IA a3 4 5 -64512
IA a3 5 0 1656
IA a3 5 1 14040
IA a3 5 2 32952
IA a3 5 3 7344
IA a3 5 4 -37632
IA a3 6 0 2628
IA a3 6 1 14256
IA a3 6 2 14976
IA a3 6 3 -11520
IA a3 7 0 2160
IA a3 7 1 5760
IA a3 7 2 -1440
IA a3 8 0 720
IA a4 0 3 -144
IA a4 0 4 -1200
IA a4 0 5 -3888
IA a4 0 6 -6144
IA a4 0 7 -4992
IA a4 0 8 -2304
IA a4 0 9 -768
IA a4 1 2 -144
IA a4 1 3 -2304
IA a4 1 4 -12168
IA a4 1 5 -30816
IA a4 1 6 -43200
IA a4 1 7 -35712
IA a4 1 8 -14976
IA a4 2 1 36
IA a4 2 2 -816
IA a4 2 3 -11160
IA a4 2 4 -49296
IA a4 2 5 -107040
IA a4 2 6 -123840
IA a4 2 7 -63744
IA a4 3 0 36
IA a4 3 1 558
IA a4 3 2 -1080
IA a4 3 3 -28008
IA a4 3 4 -111120
IA a4 3 5 -187200
IA a4 3 6 -123456
IA a4 4 0 270
IA a4 4 1 2628
IA a4 4 2 1008
IA a4 4 3 -45072
IA a4 4 4 -139680
IA a4 4 5 -129024
IA a4 5 0 828
IA a4 5 1 5706
IA a4 5 2 2184
IA a4 5 3 -46584
IA a4 5 4 -75264
IA a4 6 0 1314
IA a4 6 1 6048
IA a4 6 2 -1512
IA a4 6 3 -23040
IA a4 7 0 1080
IA a4 7 1 2520
IA a4 7 2 -2880
IA a4 8 0 360
IA a5 0 4 24
IA a5 0 5 72
IA a5 0 6 -96
IA a5 0 7 -384
IA a5 0 9 384
IA a5 1 3 204
IA a5 1 4 1620
IA a5 1 5 4896
IA a5 1 6 8544
IA a5 1 7 10944
IA a5 1 8 7488
IA a5 2 1 -144
IA a5 2 2 -888
IA a5 2 3 -36
IA a5 2 4 10752
IA a5 2 5 34224
IA a5 2 6 52992
IA a5 2 7 36480
IA a5 3 0 -72
IA a5 3 1 -1572
IA a5 3 2 -6210
IA a5 3 3 -420
IA a5 3 4 43200
IA a5 3 5 103248
IA a5 3 6 85152
IA a5 4 0 -540
IA a5 4 1 -6210
IA a5 4 2 -15264
IA a5 4 3 13836
IA a5 4 4 101088
IA a5 4 5 113328
IA a5 5 0 -1656
IA a5 5 1 -11748
IA a5 5 2 -12306
IA a5 5 3 48816
IA a5 5 4 90888
IA a5 6 0 -2628
IA a5 6 1 -10398
IA a5 6 2 7344
IA a5 6 3 43512
IA a5 7 0 -2160
IA a5 7 1 -2304
IA a5 7 2 11448
IA a5 8 0 -720
IA a5 8 1 1272
IA a6 0 3 288
IA a6 0 4 2400
IA a6 0 5 7776
IA a6 0 6 12288
IA a6 0 7 9984
IA a6 0 8 4608
IA a6 0 9 1536
IA a6 1 2 432
IA a6 1 3 6096
IA a6 1 4 30096
IA a6 1 5 72000
IA a6 1 6 94848
IA a6 1 7 73728
IA a6 1 8 29952
IA a6 2 1 36
IA a6 2 2 4080
IA a6 2 3 38160
IA a6 2 4 141648
IA a6 2 5 268800
IA a6 2 6 280512
IA a6 2 7 136704
IA a6 3 0 -36
IA a6 3 1 150
IA a6 3 2 17028
IA a6 3 3 120696
IA a6 3 4 346416
IA a6 3 5 488448
IA a6 3 6 293760
IA a6 4 0 -270
IA a6 4 1 432
IA a6 4 2 41616
IA a6 4 3 221928
IA a6 4 4 456480
IA a6 4 5 355680
IA a6 5 0 -828
IA a6 5 1 1506
IA a6 5 2 64356
IA a6 5 3 234504
IA a6 5 4 257040
IA a6 6 0 -1314
IA a6 6 1 3828
IA a6 6 2 60552
IA a6 6 3 110064
IA a6 7 0 -1080
IA a6 7 1 5112
IA a6 7 2 25776
IA a6 8 0 -360
IA a6 8 1 2544
IA a7 0 3 -144
IA a7 0 4 -1200
IA a7 0 5 -3888
IA a7 0 6 -6144
IA a7 0 7 -4992
IA a7 0 8 -2304
IA a7 0 9 -768
IA a7 1 2 -288
IA a7 1 3 -3792
IA a7 1 4 -17928
IA a7 1 5 -41184
IA a7 1 6 -51648
IA a7 1 7 -38016
IA a7 1 8 -14976
IA a7 2 1 -72
IA a7 2 2 -3264
IA a7 2 3 -27000
IA a7 2 4 -92352
IA a7 2 5 -161760
IA a7 2 6 -156672
IA a7 2 7 -72960
IA a7 3 1 -708
IA a7 3 2 -15948
IA a7 3 3 -92688
IA a7 3 4 -235296
IA a7 3 5 -301248
IA a7 3 6 -170304
IA a7 4 1 -3060
IA a7 4 2 -42624
IA a7 4 3 -176856
IA a7 4 4 -316800
IA a7 4 5 -226656
IA a7 5 1 -7212
IA a7 5 2 -66540
IA a7 5 3 -187920
IA a7 5 4 -181776
IA a7 6 1 -9876
IA a7 6 2 -59040
IA a7 6 3 -87024
IA a7 7 1 -7632
IA a7 7 2 -22896
IA a7 8 1 -2544
IBC bc0 1 3 72
IBC bc0 1 4 792
IBC bc0 1 5 3744
IBC bc0 1 6 9936
IBC bc0 1 7 16128
IBC bc0 1 8 16128
IBC bc0 1 9 9216
IBC bc0 1 10 2304
IBC bc0 2 2 108
IBC bc0 2 3 1944
IBC bc0 2 4 12852
IBC bc0 2 5 44064
IBC bc0 2 6 87984
IBC bc0 2 7 104544
IBC bc0 2 8 69120
IBC bc0 2 9 19584
IBC bc0 3 1 36
IBC bc0 3 2 1530
IBC bc0 3 3 16146
IBC bc0 3 4 76572
IBC bc0 3 5 196056
IBC bc0 3 6 284688
IBC bc0 3 7 222336
IBC bc0 3 8 72576
IBC bc0 4 1 378
IBC bc0 4 2 8748
IBC bc0 4 3 65052
IBC bc0 4 4 228348
IBC bc0 4 5 422424
IBC bc0 4 6 401040
IBC bc0 4 7 154080
IBC bc0 5 1 1710
IBC bc0 5 2 26946
IBC bc0 5 3 146502
IBC bc0 5 4 368892
IBC bc0 5 5 443880
IBC bc0 5 6 206640
IBC bc0 6 1 4338
IBC bc0 6 2 49032
IBC bc0 6 3 189540
IBC bc0 6 4 308736
IBC bc0 6 5 181584
IBC bc0 7 1 6678
IBC bc0 7 2 53028
IBC bc0 7 3 131760
IBC bc0 7 4 104544
IBC bc0 8 1 6228
IBC bc0 8 2 31536
IBC bc0 8 3 38016
IBC bc0 9 1 3240
IBC bc0 9 2 7920
IBC bc0 10 1 720
IBC bc1 1 3 28
IBC bc1 1 4 204
IBC bc1 1 5 416
IBC bc1 1 6 -400
IBC bc1 1 7 -2880
IBC bc1 1 8 -4544
IBC bc1 1 9 -3072
IBC bc1 1 10 -768
IBC bc1 2 2 42
IBC bc1 2 3 186
IBC bc1 2 4 -2624
IBC bc1 2 5 -21492
IBC bc1 2 6 -63888
IBC bc1 2 7 -93136
IBC bc1 2 8 -66816
IBC bc1 2 9 -18816
IBC bc1 3 1 14
IBC bc1 3 2 -78
IBC bc1 3 3 -8032
IBC bc1 3 4 -69242
IBC bc1 3 5 -241376
IBC bc1 3 6 -411848
IBC bc1 3 7 -342432
IBC bc1 3 8 -110848
IBC bc1 4 1 -60
IBC bc1 4 2 -6676
IBC bc1 4 3 -84142
IBC bc1 4 4 -389392
IBC bc1 4 5 -830644
IBC bc1 4 6 -831744
IBC bc1 4 7 -316400
IBC bc1 5 1 -1684
IBC bc1 5 2 -44562
IBC bc1 5 3 -315726
IBC bc1 5 4 -908010
IBC bc1 5 5 -1145976
IBC bc1 5 6 -527592
IBC bc1 6 1 -8570
IBC bc1 6 2 -126620
IBC bc1 6 3 -557030
IBC bc1 6 4 -948576
IBC bc1 6 5 -551288
IBC bc1 7 1 -19918
IBC bc1 7 2 -180374
IBC bc1 7 3 -467952
IBC bc1 7 4 -366736
IBC bc1 8 1 -23966
IBC bc1 8 2 -126816
IBC bc1 8 3 -151008
IBC bc1 9 1 -14520
IBC bc1 9 2 -35080
IBC bc1 10 1 -3512
IBC bc2 1 2 -144
IBC bc2 1 3 -1584
IBC bc2 1 4 -7488
IBC bc2 1 5 -19872
IBC bc2 1 6 -32256
IBC bc2 1 7 -32256
IBC bc2 1 8 -18432
IBC bc2 1 9 -4608
IBC bc2 2 1 -252
IBC bc2 2 2 -4284
IBC bc2 2 3 -27576
IBC bc2 2 4 -93096
IBC bc2 2 5 -184032
IBC bc2 2 6 -217152
IBC bc2 2 7 -142848
IBC bc2 2 8 -40320
IBC bc2 3 0 -108
IBC bc2 3 1 -3834
IBC bc2 3 2 -37782
IBC bc2 3 3 -172692
IBC bc2 3 4 -432072
IBC bc2 3 5 -617616
IBC bc2 3 6 -476928
IBC bc2 3 7 -154368
IBC bc2 4 0 -1134
IBC bc2 4 1 -22824
IBC bc2 4 2 -158616
IBC bc2 4 3 -534744
IBC bc2 4 4 -963072
IBC bc2 4 5 -897120
IBC bc2 4 6 -339840
IBC bc2 5 0 -5130
IBC bc2 5 1 -72162
IBC bc2 5 2 -368154
IBC bc2 5 3 -889884
IBC bc2 5 4 -1040760
IBC bc2 5 5 -474480
IBC bc2 6 0 -13014
IBC bc2 6 1 -133740
IBC bc2 6 2 -487476
IBC bc2 6 3 -762912
IBC bc2 6 4 -435888
IBC bc2 7 0 -20034
IBC bc2 7 1 -146628
IBC bc2 7 2 -345168
IBC bc2 7 3 -263520
IBC bc2 8 0 -18684
IBC bc2 8 1 -88128
IBC bc2 8 2 -101088
IBC bc2 9 0 -9720
IBC bc2 9 1 -22320
IBC bc2 10 0 -2160
IBC bc3 0 4 -24
IBC bc3 0 5 -144
IBC bc3 0 6 -168
IBC bc3 0 7 528
IBC bc3 0 8 1344
IBC bc3 0 9 384
IBC bc3 0 10 -1152
IBC bc3 0 11 -768
IBC bc3 1 3 -36
IBC bc3 1 4 -792
IBC bc3 1 5 -5100
IBC bc3 1 6 -17064
IBC bc3 1 7 -36768
IBC bc3 1 8 -53184
IBC bc3 1 9 -45504
IBC bc3 1 10 -16512
IBC bc3 2 1 144
IBC bc3 2 2 1572
IBC bc3 2 3 6552
IBC bc3 2 4 8148
IBC bc3 2 5 -28752
IBC bc3 2 6 -139680
IBC bc3 2 7 -263424
IBC bc3 2 8 -248256
IBC bc3 2 9 -94464
IBC bc3 3 0 72
IBC bc3 3 1 2304
IBC bc3 3 2 17928
IBC bc3 3 3 59280
IBC bc3 3 4 66948
IBC bc3 3 5 -121344
IBC bc3 3 6 -487008
IBC bc3 3 7 -599040
IBC bc3 3 8 -265920
IBC bc3 4 0 756
IBC bc3 4 1 14076
IBC bc3 4 2 82704
IBC bc3 4 3 207000
IBC bc3 4 4 141792
IBC bc3 4 5 -360960
IBC bc3 4 6 -776448
IBC bc3 4 7 -439680
IBC bc3 5 0 3420
IBC bc3 5 1 45216
IBC bc3 5 2 200244
IBC bc3 5 3 349488
IBC bc3 5 4 47904
IBC bc3 5 5 -543744
IBC bc3 5 6 -456768
IBC bc3 6 0 8676
IBC bc3 6 1 84708
IBC bc3 6 2 269064
IBC bc3 6 3 269616
IBC bc3 6 4 -152352
IBC bc3 6 5 -302592
IBC bc3 7 0 13356
IBC bc3 7 1 93600
IBC bc3 7 2 188016
IBC bc3 7 3 47232
IBC bc3 7 4 -124224
IBC bc3 8 0 12456
IBC bc3 8 1 56592
IBC bc3 8 2 50112
IBC bc3 8 3 -28800
IBC bc3 9 0 6480
IBC bc3 9 1 14400
IBC bc3 9 2 -2880
IBC bc3 10 0 1440
IBC bc4 0 3 -144
IBC bc4 0 4 -1632
IBC bc4 0 5 -7776
IBC bc4 0 6 -20208
IBC bc4 0 7 -31200
IBC bc4 0 8 -29568
IBC bc4 0 9 -17664
IBC bc4 0 10 -6912
IBC bc4 0 11 -1536
IBC bc4 1 2 -144
IBC bc4 1 3 -3168
IBC bc4 1 4 -23544
IBC bc4 1 5 -88392
IBC bc4 1 6 -193968
IBC bc4 1 7 -266496
IBC bc4 1 8 -235392
IBC bc4 1 9 -127872
IBC bc4 1 10 -33024
IBC bc4 2 1 36
IBC bc4 2 2 -1140
IBC bc4 2 3 -21312
IBC bc4 2 4 -132528
IBC bc4 2 5 -426144
IBC bc4 2 6 -808704
IBC bc4 2 7 -939264
IBC bc4 2 8 -631296
IBC bc4 2 9 -188928
IBC bc4 3 0 36
IBC bc4 3 1 774
IBC bc4 3 2 -1926
IBC bc4 3 3 -71484
IBC bc4 3 4 -414168
IBC bc4 3 5 -1156512
IBC bc4 3 6 -1793376
IBC bc4 3 7 -1502784
IBC bc4 3 8 -531840
IBC bc4 4 0 378
IBC bc4 4 1 5328
IBC bc4 4 2 6792
IBC bc4 4 3 -147456
IBC bc4 4 4 -816864
IBC bc4 4 5 -1858368
IBC bc4 4 6 -2033280
IBC bc4 4 7 -879360
IBC bc4 5 0 1710
IBC bc4 5 1 18270
IBC bc4 5 2 32334
IBC bc4 5 3 -215820
IBC bc4 5 4 -1032216
IBC bc4 5 5 -1639152
IBC bc4 5 6 -913536
IBC bc4 6 0 4338
IBC bc4 6 1 35676
IBC bc4 6 2 50652
IBC bc4 6 3 -236640
IBC bc4 6 4 -763632
IBC bc4 6 5 -605184
IBC bc4 7 0 6678
IBC bc4 7 1 40572
IBC bc4 7 2 30864
IBC bc4 7 3 -171936
IBC bc4 7 4 -248448
IBC bc4 8 0 6228
IBC bc4 8 1 25056
IBC bc4 8 2 -864
IBC bc4 8 3 -57600
IBC bc4 9 0 3240
IBC bc4 9 1 6480
IBC bc4 9 2 -5760
IBC bc4 10 0 720
IBC bc5 0 4 24
IBC bc5 0 5 144
IBC bc5 0 6 168
IBC bc5 0 7 -528
IBC bc5 0 8 -1344
IBC bc5 0 9 -384
IBC bc5 0 10 1152
IBC bc5 0 11 768
IBC bc5 1 3 60
IBC bc5 1 4 720
IBC bc5 1 5 3276
IBC bc5 1 6 9192
IBC bc5 1 7 21792
IBC bc5 1 8 39744
IBC bc5 1 9 40896
IBC bc5 1 10 16512
IBC bc5 2 1 -144
IBC bc5 2 2 -1536
IBC bc5 2 3 -6372
IBC bc5 2 4 -10644
IBC bc5 2 5 10680
IBC bc5 2 6 97920
IBC bc5 2 7 228192
IBC bc5 2 8 248256
IBC bc5 2 9 103680
IBC bc5 3 0 -72
IBC bc5 3 1 -2292
IBC bc5 3 2 -17532
IBC bc5 3 3 -57864
IBC bc5 3 4 -70488
IBC bc5 3 5 111072
IBC bc5 3 6 520080
IBC bc5 3 7 699840
IBC bc5 3 8 331200
IBC bc5 4 0 -756
IBC bc5 4 1 -13932
IBC bc5 4 2 -79632
IBC bc5 4 3 -187404
IBC bc5 4 4 -62544
IBC bc5 4 5 589176
IBC bc5 4 6 1127808
IBC bc5 4 7 640224
IBC bc5 5 0 -3420
IBC bc5 5 1 -44232
IBC bc5 5 2 -183288
IBC bc5 5 3 -242748
IBC bc5 5 4 300540
IBC bc5 5 5 1111536
IBC bc5 5 6 805392
IBC bc5 6 0 -8676
IBC bc5 6 1 -80688
IBC bc5 6 2 -215472
IBC bc5 6 3 -16620
IBC bc5 6 4 667872
IBC bc5 6 5 677232
IBC bc5 7 0 -13356
IBC bc5 7 1 -84012
IBC bc5 7 2 -97164
IBC bc5 7 3 223200
IBC bc5 7 4 378720
IBC bc5 8 0 -12456
IBC bc5 8 1 -43644
IBC bc5 8 2 26496
IBC bc5 8 3 135360
IBC bc5 9 0 -6480
IBC bc5 9 1 -5328
IBC bc5 9 2 27984
IBC bc5 10 0 -1440
IBC bc5 10 1 2544
IBC bc6 0 3 288
IBC bc6 0 4 3264
IBC bc6 0 5 15552
IBC bc6 0 6 40416
IBC bc6 0 7 62400
IBC bc6 0 8 59136
IBC bc6 0 9 35328
IBC bc6 0 10 13824
IBC bc6 0 11 3072
IBC bc6 1 2 432
IBC bc6 1 3 8112
IBC bc6 1 4 56016
IBC bc6 1 5 200208
IBC bc6 1 6 421728
IBC bc6 1 7 558336
IBC bc6 1 8 478464
IBC bc6 1 9 255744
IBC bc6 1 10 66048
IBC bc6 2 1 36
IBC bc6 2 2 5268
IBC bc6 2 3 66888
IBC bc6 2 4 357192
IBC bc6 2 5 1041072
IBC bc6 2 6 1837440
IBC bc6 2 7 2030400
IBC bc6 2 8 1330560
IBC bc6 2 9 396288
IBC bc6 3 0 -36
IBC bc6 3 1 78
IBC bc6 3 2 27162
IBC bc6 3 3 279396
IBC bc6 3 4 1231728
IBC bc6 3 5 2984976
IBC bc6 3 6 4262304
IBC bc6 3 7 3424896
IBC bc6 3 8 1194240
IBC bc6 4 0 -378
IBC bc6 4 1 -900
IBC bc6 4 2 81696
IBC bc6 4 3 720672
IBC bc6 4 4 2643840
IBC bc6 4 5 5102544
IBC bc6 4 6 5166720
IBC bc6 4 7 2159808
IBC bc6 5 0 -1710
IBC bc6 5 1 -4674
IBC bc6 5 2 169422
IBC bc6 5 3 1256652
IBC bc6 5 4 3624384
IBC bc6 5 5 4869360
IBC bc6 5 6 2524320
IBC bc6 6 0 -4338
IBC bc6 6 1 -7944
IBC bc6 6 2 264324
IBC bc6 6 3 1480248
IBC bc6 6 4 2898288
IBC bc6 6 5 1959648
IBC bc6 7 0 -6678
IBC bc6 7 1 -1452
IBC bc6 7 2 298536
IBC bc6 7 3 1050336
IBC bc6 7 4 1005888
IBC bc6 8 0 -6228
IBC bc6 8 1 11928
IBC bc6 8 2 205920
IBC bc6 8 3 328320
IBC bc6 9 0 -3240
IBC bc6 9 1 14256
IBC bc6 9 2 61728
IBC bc6 10 0 -720
IBC bc6 10 1 5088
IBC bc7 0 3 -144
IBC bc7 0 4 -1632
IBC bc7 0 5 -7776
IBC bc7 0 6 -20208
IBC bc7 0 7 -31200
IBC bc7 0 8 -29568
IBC bc7 0 9 -17664
IBC bc7 0 10 -6912
IBC bc7 0 11 -1536
IBC bc7 1 2 -288
IBC bc7 1 3 -4944
IBC bc7 1 4 -32472
IBC bc7 1 5 -111816
IBC bc7 1 6 -227760
IBC bc7 1 7 -291840
IBC bc7 1 8 -243072
IBC bc7 1 9 -127872
IBC bc7 1 10 -33024
IBC bc7 2 1 -72
IBC bc7 2 2 -4128
IBC bc7 2 3 -45576
IBC bc7 2 4 -224664
IBC bc7 2 5 -614928
IBC bc7 2 6 -1028736
IBC bc7 2 7 -1091136
IBC bc7 2 8 -699264
IBC bc7 2 9 -207360
IBC bc7 3 1 -852
IBC bc7 3 2 -25236
IBC bc7 3 3 -207912
IBC bc7 3 4 -817560
IBC bc7 3 5 -1828464
IBC bc7 3 6 -2468928
IBC bc7 3 7 -1922112
IBC bc7 3 8 -662400
IBC bc7 4 1 -4428
IBC bc7 4 2 -88488
IBC bc7 4 3 -573216
IBC bc7 4 4 -1826976
IBC bc7 4 5 -3244176
IBC bc7 4 6 -3133440
IBC bc7 4 7 -1280448
IBC bc7 5 1 -13596
IBC bc7 5 2 -201756
IBC bc7 5 3 -1040832
IBC bc7 5 4 -2592168
IBC bc7 5 5 -3230208
IBC bc7 5 6 -1610784
IBC bc7 6 1 -27732
IBC bc7 6 2 -314976
IBC bc7 6 3 -1243608
IBC bc7 6 4 -2134656
IBC bc7 6 5 -1354464
IBC bc7 7 1 -39120
IBC bc7 7 2 -329400
IBC bc7 7 3 -878400
IBC bc7 7 4 -757440
IBC bc7 8 1 -36984
IBC bc7 8 2 -205056
IBC bc7 8 3 -270720
IBC bc7 9 1 -20736
IBC bc7 9 2 -55968
IBC bc7 10 1 -5088
IBC bc8 1 3 -72
IBC bc8 1 4 -792
IBC bc8 1 5 -3600
IBC bc8 1 6 -8640
IBC bc8 1 7 -11520
IBC bc8 1 8 -8064
IBC bc8 1 9 -2304
IBC bc8 2 2 -108
IBC bc8 2 3 -1872
IBC bc8 2 4 -11628
IBC bc8 2 5 -35424
IBC bc8 2 6 -57312
IBC bc8 2 7 -47232
IBC bc8 2 8 -15552
IBC bc8 3 1 -36
IBC bc8 3 2 -1422
IBC bc8 3 3 -13842
IBC bc8 3 4 -57528
IBC bc8 3 5 -118080
IBC bc8 3 6 -118080
IBC bc8 3 7 -45792
IBC bc8 4 1 -342
IBC bc8 4 2 -7164
IBC bc8 4 3 -46152
IBC bc8 4 4 -128772
IBC bc8 4 5 -163152
IBC bc8 4 6 -76752
IBC bc8 5 1 -1350
IBC bc8 5 2 -18234
IBC bc8 5 3 -78246
IBC bc8 5 4 -134352
IBC bc8 5 5 -79992
IBC bc8 6 1 -2826
IBC bc8 6 2 -25056
IBC bc8 6 3 -65808
IBC bc8 6 4 -52992
IBC bc8 7 1 -3294
IBC bc8 7 2 -17712
IBC bc8 7 3 -21744
IBC bc8 8 1 -2016
IBC bc8 8 2 -5040
IBC bc8 9 1 -504
IBC bc9 1 5 288
IBC bc9 1 6 2592
IBC bc9 1 7 9216
IBC bc9 1 8 16128
IBC bc9 1 9 13824
IBC bc9 1 10 4608
IBC bc9 2 3 216
IBC bc9 2 4 3096
IBC bc9 2 5 19584
IBC bc9 2 6 65376
IBC bc9 2 7 118080
IBC bc9 2 8 108288
IBC bc9 2 9 39168
IBC bc9 3 2 324
IBC bc9 3 3 6084
IBC bc9 3 4 45144
IBC bc9 3 5 171504
IBC bc9 3 6 349344
IBC bc9 3 7 359424
IBC bc9 3 8 145152
IBC bc9 4 1 108
IBC bc9 4 2 4248
IBC bc9 4 3 45720
IBC bc9 4 4 222696
IBC bc9 4 5 549360
IBC bc9 4 6 663264
IBC bc9 4 7 308160
IBC bc9 5 1 972
IBC bc9 5 2 21276
IBC bc9 5 3 153972
IBC bc9 5 4 499896
IBC bc9 5 5 746352
IBC bc9 5 6 413280
IBC bc9 6 1 3708
IBC bc9 6 2 54288
IBC bc9 6 3 264456
IBC bc9 6 4 525312
IBC bc9 6 5 363168
IBC bc9 7 1 7668
IBC bc9 7 2 75528
IBC bc9 7 3 226080
IBC bc9 7 4 209088
IBC bc9 8 1 9000
IBC bc9 8 2 54432
IBC bc9 8 3 76032
IBC bc9 9 1 5616
IBC bc9 9 2 15840
IBC bc9 10 1 1440
IBC bc10 1 3 -144
IBC bc10 1 4 -1584
IBC bc10 1 5 -7776
IBC bc10 1 6 -22464
IBC bc10 1 7 -41472
IBC bc10 1 8 -48384
IBC bc10 1 9 -32256
IBC bc10 1 10 -9216
IBC bc10 2 2 -216
IBC bc10 2 3 -4104
IBC bc10 2 4 -28800
IBC bc10 2 5 -107712
IBC bc10 2 6 -241344
IBC bc10 2 7 -327168
IBC bc10 2 8 -246528
IBC bc10 2 9 -78336
IBC bc10 3 1 -72
IBC bc10 3 2 -3384
IBC bc10 3 3 -38376
IBC bc10 3 4 -198288
IBC bc10 3 5 -563616
IBC bc10 3 6 -918720
IBC bc10 3 7 -804096
IBC bc10 3 8 -290304
IBC bc10 4 1 -864
IBC bc10 4 2 -21744
IBC bc10 4 3 -175824
IBC bc10 4 4 -679392
IBC bc10 4 5 -1394208
IBC bc10 4 6 -1465344
IBC bc10 4 7 -616320
IBC bc10 5 1 -4392
IBC bc10 5 2 -75168
IBC bc10 5 3 -446976
IBC bc10 5 4 -1237680
IBC bc10 5 5 -1634112
IBC bc10 5 6 -826560
IBC bc10 6 1 -12384
IBC bc10 6 2 -152352
IBC bc10 6 3 -643536
IBC bc10 6 4 -1142784
IBC bc10 6 5 -726336
IBC bc10 7 1 -21024
IBC bc10 7 2 -181584
IBC bc10 7 3 -489600
IBC bc10 7 4 -418176
IBC bc10 8 1 -21456
IBC bc10 8 2 -117504
IBC bc10 8 3 -152064
IBC bc10 9 1 -12096
IBC bc10 9 2 -31680
IBC bc10 10 1 -2880
IBC bc11 1 3 -72
IBC bc11 1 4 -792
IBC bc11 1 5 -3456
IBC bc11 1 6 -7344
IBC bc11 1 7 -6912
IBC bc11 1 9 4608
IBC bc11 1 10 2304
IBC bc11 2 2 -108
IBC bc11 2 3 -1728
IBC bc11 2 4 -9756
IBC bc11 2 5 -24480
IBC bc11 2 6 -22608
IBC bc11 2 7 13536
IBC bc11 2 8 39168
IBC bc11 2 9 19584
IBC bc11 3 1 -36
IBC bc11 3 2 -1206
IBC bc11 3 3 -10062
IBC bc11 3 4 -31428
IBC bc11 3 5 -24552
IBC bc11 3 6 64656
IBC bc11 3 7 137088
IBC bc11 3 8 72576
IBC bc11 4 1 -270
IBC bc11 4 2 -4500
IBC bc11 4 3 -19332
IBC bc11 4 4 -5652
IBC bc11 4 5 126936
IBC bc11 4 6 262224
IBC bc11 4 7 154080
IBC bc11 5 1 -738
IBC bc11 5 2 -5670
IBC bc11 5 3 7470
IBC bc11 5 4 131004
IBC bc11 5 5 302472
IBC bc11 5 6 206640
IBC bc11 6 1 -630
IBC bc11 6 2 5256
IBC bc11 6 3 74916
IBC bc11 6 4 216576
IBC bc11 6 5 181584
IBC bc11 7 1 990
IBC bc11 7 2 22500
IBC bc11 7 3 94320
IBC bc11 7 4 104544
IBC bc11 8 1 2772
IBC bc11 8 2 22896
IBC bc11 8 3 38016
IBC bc11 9 1 2376
IBC bc11 9 2 7920
IBC bc11 10 1 720
ID d0 1 0 -5
ID d0 1 1 -4
ID d0 1 2 36
ID d0 1 3 64
ID d0 1 4 32
ID d0 2 0 -6
ID d0 2 1 64
ID d0 2 2 184
ID d0 2 3 128
ID d0 3 0 31
ID d0 3 1 188
ID d0 3 2 196
ID d0 4 0 68
ID d0 4 1 136
ID d0 5 0 36
ID d1 1 0 10
ID d1 1 1 64
ID d1 1 2 152
ID d1 1 3 160
ID d1 1 4 64
ID d1 2 0 60
ID d1 2 1 288
ID d1 2 2 464
ID d1 2 3 256
ID d1 3 0 138
ID d1 3 1 448
ID d1 3 2 376
ID d1 4 0 144
ID d1 4 1 240
ID d1 5 0 56
ID d2 0 0 8
ID d2 0 1 80
ID d2 0 2 320
ID d2 0 3 640
ID d2 0 4 640
ID d2 0 5 256
ID d2 1 0 92
ID d2 1 1 704
ID d2 1 2 2032
ID d2 1 3 2624
ID d2 1 4 1280
ID d2 2 0 376
ID d2 2 1 2112
ID d2 2 2 4000
ID d2 2 3 2560
ID d2 3 0 724
ID d2 3 1 2688
ID d2 3 2 2544
ID d2 4 0 672
ID d2 4 1 1248
ID d2 5 0 240
ID d3 0 0 -8
ID d3 0 1 -80
ID d3 0 2 -320
ID d3 0 3 -640
ID d3 0 4 -640
ID d3 0 5 -256
ID d3 1 0 -92
ID d3 1 1 -704
ID d3 1 2 -2032
ID d3 1 3 -2624
ID d3 1 4 -1280
ID d3 2 0 -376
ID d3 2 1 -2112
ID d3 2 2 -4000
ID d3 2 3 -2560
ID d3 3 0 -724
ID d3 3 1 -2688
ID d3 3 2 -2544
ID d3 4 0 -672
ID d3 4 1 -1248
ID d3 5 0 -240
ID d4 0 0 8
ID d4 0 1 80
ID d4 0 2 320
ID d4 0 3 640
ID d4 0 4 640
ID d4 0 5 256
ID d4 1 0 64
ID d4 1 1 512
ID d4 1 2 1536
ID d4 1 3 2048
ID d4 1 4 1024
ID d4 2 0 208
ID d4 2 1 1248
ID d4 2 2 2496
ID d4 2 3 1664
ID d4 3 0 344
ID d4 3 1 1376
ID d4 3 2 1376
ID d4 4 0 288
ID d4 4 1 576
ID d4 5 0 96
ID d5 1 0 -2
ID d5 1 1 -16
ID d5 1 2 -48
ID d5 1 3 -64
ID d5 1 4 -32
ID d5 2 0 -12
ID d5 2 1 -72
ID d5 2 2 -144
ID d5 2 3 -96
ID d5 3 0 -26
ID d5 3 1 -104
ID d5 3 2 -104
ID d5 4 0 -24
ID d5 4 1 -48
ID d5 5 0 -8
ID d6 0 0 8
ID d6 0 1 80
ID d6 0 2 336
ID d6 0 3 768
ID d6 0 4 1024
ID d6 0 5 768
ID d6 0 6 256
ID d6 1 0 76
ID d6 1 1 648
ID d6 1 2 2256
ID d6 1 3 4064
ID d6 1 4 3840
ID d6 1 5 1536
ID d6 2 0 304
ID d6 2 1 2144
ID d6 2 2 5856
ID d6 2 3 7424
ID d6 2 4 3712
ID d6 3 0 660
ID d6 3 1 3640
ID d6 3 2 6960
ID d6 3 3 4640
ID d6 4 0 824
ID d6 4 1 3168
ID d6 4 2 3168
ID d6 5 0 560
ID d6 5 1 1120
ID d6 6 0 160
checksum fnv1a64 9d4365a4e9d0590e
)COEFF";

}  // namespace bures::detail
